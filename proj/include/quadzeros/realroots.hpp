#ifndef QUADZEROS_REALROOTS_HPP
#define QUADZEROS_REALROOTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/rational.hpp"

namespace quadzeros {

/// A point of the extended real line with a rational finite part.
struct RealBound {
    enum class Kind { NegInf, Finite, PosInf };

    Kind kind = Kind::Finite;
    Rational value;

    RealBound() = default;
    RealBound(Rational v) : kind(Kind::Finite), value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    RealBound(int v) : kind(Kind::Finite), value(v) {}                  // NOLINT(google-explicit-constructor)

    static RealBound neg_inf() {
        RealBound b;
        b.kind = Kind::NegInf;
        return b;
    }
    static RealBound pos_inf() {
        RealBound b;
        b.kind = Kind::PosInf;
        return b;
    }

    bool is_finite() const noexcept { return kind == Kind::Finite; }
};

inline bool operator<(const RealBound& x, const RealBound& y) {
    if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    return x.is_finite() && x.value < y.value;
}

using RationalInterval = std::pair<Rational, Rational>;

namespace detail {

/// Integer coefficients, ascending degree; empty is zero.
using IntPoly = std::vector<Integer>;

inline void make_primitive(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

/// Positive rational multiple of p with coprime integer coefficients.
inline IntPoly to_primitive_integer(const RationalPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
    make_primitive(out);
    return out;
}

inline RationalPoly to_rational(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

/// mu*A mod B for some mu > 0, all in integer arithmetic.
inline IntPoly positive_pseudo_remainder(IntPoly r, const IntPoly& b) {
    const std::size_t m = b.size() - 1;
    const Integer& lc = b.back();
    const Integer abs_lc = abs(lc);
    const int lc_sign = sgn(lc);
    while (r.size() >= b.size()) {
        const std::size_t k = r.size() - 1;
        Integer lead = r[k];
        if (lead != 0) {
            for (auto& c : r) c *= abs_lc;
            if (lc_sign < 0) lead = -lead;
            const std::size_t off = k - m;
            for (std::size_t j = 0; j <= m; ++j) r[off + j] -= lead * b[j];
        }
        r.pop_back();
        make_primitive(r);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

/// Sign of p(x) for rational x = n/d, d > 0, via the homogenized form
/// d^deg * p(n/d), which stays in the integers.
inline int sign_at(const IntPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    Integer acc = p.back();
    if (d == 1) {
        for (std::size_t i = p.size() - 1; i-- > 0;) {
            acc *= n;
            acc += p[i];
        }
        return sgn(acc);
    }
    Integer dpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        dpow *= d;
        acc *= n;
        acc += p[i] * dpow;
    }
    return sgn(acc);
}

inline int sign_at(const IntPoly& p, const RealBound& x) {
    if (p.empty()) return 0;
    if (x.is_finite()) return sign_at(p, x.value);
    int s = sgn(p.back());
    if (x.kind == RealBound::Kind::NegInf && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

}  // namespace detail

/// Sturm chain of the squarefree part of a polynomial: (q, q', then negated
/// remainders made primitive). Sign variations at two points count the
/// distinct real roots in between.
class SturmChain {
   public:
    explicit SturmChain(const RationalPoly& p) {
        if (p.is_zero()) throw ZeroPolynomial();
        build(p);
        if (ints_.back().size() > 1) {
            // Nontrivial gcd(p, p'): restart from the squarefree part.
            RationalPoly g = detail::to_rational(ints_.back());
            build(divmod(p, g).first);
        }
    }

    const std::vector<RationalPoly>& polys() const noexcept { return polys_; }
    const RationalPoly& squarefree() const noexcept { return polys_.front(); }

    int variations(const RealBound& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : ints_) {
            int s = detail::sign_at(q, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Distinct real roots in (lo, hi].
    int count(const RealBound& lo, const RealBound& hi) const {
        if (!(lo < hi)) throw InvalidParams("count_real: require lo < hi");
        return variations(lo) - variations(hi);
    }

    /// Sign of the squarefree part at x.
    int sign_at(const Rational& x) const { return detail::sign_at(ints_.front(), x); }

    /// Disjoint rational intervals (lo, hi), in ascending order, each
    /// containing exactly one distinct real root; the squarefree part is
    /// nonzero with opposite signs at both endpoints.
    std::vector<RationalInterval> isolate() const {
        std::vector<RationalInterval> out;
        if (squarefree().degree() < 1) return out;
        Rational bound = cauchy_bound();
        Rational lo = -bound;
        const Rational& hi = bound;
        isolate_into(lo, hi, variations(lo), variations(hi), out);
        return out;
    }

    /// Power of two strictly above 1 + max |c_i / c_n|.
    Rational cauchy_bound() const {
        const auto& p = ints_.front();
        Integer lead = abs(p.back());
        Integer mx = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (mpz_cmpabs(p[i].get_mpz_t(), mx.get_mpz_t()) > 0) mx = abs(p[i]);
        }
        Integer ratio = mx / lead + 2;
        Integer pow2 = 1;
        while (pow2 < ratio) pow2 *= 2;
        return Rational(pow2);
    }

   private:
    void build(const RationalPoly& q) {
        polys_.clear();
        ints_.clear();
        polys_.push_back(q);
        ints_.push_back(detail::to_primitive_integer(q));
        if (q.degree() < 1) return;
        polys_.push_back(q.derivative());
        ints_.push_back(detail::to_primitive_integer(polys_.back()));
        while (ints_.back().size() > 1) {
            detail::IntPoly r = detail::positive_pseudo_remainder(ints_[ints_.size() - 2], ints_.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            polys_.push_back(detail::to_rational(r));
            ints_.push_back(std::move(r));
        }
    }

    void isolate_into(const Rational& lo, const Rational& hi, int vlo, int vhi,
                      std::vector<RationalInterval>& out) const {
        const int n = vlo - vhi;
        if (n <= 0) return;
        if (n == 1) {
            out.emplace_back(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (sign_at(mid) == 0) {
            // Shift off an exact rational root by a dyadic fraction of the width.
            Rational step = (hi - lo) / 8;
            Rational cand = mid + step;
            while (sign_at(cand) == 0) {
                step /= 2;
                cand = mid + step;
            }
            mid = cand;
        }
        int vmid = variations(mid);
        isolate_into(lo, mid, vlo, vmid, out);
        isolate_into(mid, hi, vmid, vhi, out);
    }

    std::vector<RationalPoly> polys_;
    std::vector<detail::IntPoly> ints_;
};

inline SturmChain sturm(const RationalPoly& p) { return SturmChain(p); }

/// Number of distinct real roots of p in (lo, hi].
inline int count_real(const RationalPoly& p, const RealBound& lo = RealBound::neg_inf(),
                      const RealBound& hi = RealBound::pos_inf()) {
    return SturmChain(p).count(lo, hi);
}

/// Yun's squarefree factorization: pairs (f_i, i) with p = lc * prod f_i^i,
/// each f_i monic, squarefree and pairwise coprime. Constant factors omitted.
inline std::vector<std::pair<RationalPoly, int>> squarefree_factorization(const RationalPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<RationalPoly, int>> out;
    if (p.degree() < 1) return out;
    RationalPoly dp = p.derivative();
    RationalPoly b = gcd(p, dp);
    RationalPoly c = divmod(p, b).first;
    RationalPoly d = divmod(dp, b).first - c.derivative();
    int i = 1;
    while (c.degree() >= 1) {
        RationalPoly a = gcd(c, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        c = divmod(c, a).first;
        d = divmod(d, a).first - c.derivative();
        ++i;
    }
    return out;
}

/// Reality verdict for a nonzero polynomial. real_count counts multiplicity.
struct RealityVerdict {
    int degree = 0;
    int real_count = 0;
    int distinct_real = 0;
    bool all_real = true;
    std::vector<RationalInterval> isolating_intervals;
};

inline RealityVerdict verdict(const RationalPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    RealityVerdict v;
    v.degree = p.degree();
    if (v.degree == 0) return v;
    SturmChain chain(p);
    v.isolating_intervals = chain.isolate();
    v.distinct_real = static_cast<int>(v.isolating_intervals.size());
    if (chain.squarefree().degree() == v.degree) {
        v.real_count = v.distinct_real;
    } else {
        v.real_count = 0;
        for (const auto& [factor, mult] : squarefree_factorization(p)) v.real_count += mult * count_real(factor);
    }
    v.all_real = v.real_count == v.degree;
    return v;
}

/// Shrinks an isolating interval by exact bisection until its width is at
/// most tol. Returns a degenerate interval if a bisection point is a root.
inline RationalInterval refine_bracket(const SturmChain& chain, RationalInterval iv, double tol) {
    if (!(tol > 0)) throw InvalidParams("refine: tol must be positive");
    auto& [lo, hi] = iv;
    if (!(lo < hi)) throw NotIsolating("refine: empty interval");
    int slo = chain.sign_at(lo);
    int shi = chain.sign_at(hi);
    if (slo == 0) return {lo, lo};
    if (shi == 0) return {hi, hi};
    if (slo == shi) throw NotIsolating("refine: no sign change over the interval");
    const Rational width(tol);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = chain.sign_at(mid);
        if (s == 0) return {mid, mid};
        if (s == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return iv;
}

inline double refine(const SturmChain& chain, const RationalInterval& iv, double tol) {
    auto [lo, hi] = refine_bracket(chain, iv, tol);
    return to_double((lo + hi) / 2);
}

/// Root of p inside an isolating interval to within tol.
inline double refine(const RationalPoly& p, const RationalInterval& iv, double tol) {
    return refine(SturmChain(p), iv, tol);
}

/// All distinct real roots of p, ascending, each to within tol.
inline std::vector<double> real_roots(const RationalPoly& p, double tol = 1e-12) {
    SturmChain chain(p);
    std::vector<double> out;
    for (const auto& iv : chain.isolate()) out.push_back(refine(chain, iv, tol));
    return out;
}

}  // namespace quadzeros

#endif  // QUADZEROS_REALROOTS_HPP
