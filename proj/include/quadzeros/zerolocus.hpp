#ifndef QUADZEROS_ZEROLOCUS_HPP
#define QUADZEROS_ZEROLOCUS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "quadzeros/complex_roots.hpp"
#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/rational.hpp"
#include "quadzeros/realroots.hpp"
#include "quadzeros/recurrence.hpp"

namespace quadzeros {

/// Reduction (c, b0, b1, a0, a1) -> (a, b):
///   a = b0/c^2 - b1 a0 / (c^2 a1),  b = -b1 c / a1.
inline NormParams normalize(const GeneralParams& g) {
    g.validate();
    const Rational c2 = g.c * g.c;
    NormParams p{g.b0 / c2 - g.b1 * g.a0 / (c2 * g.a1), -g.b1 * g.c / g.a1};
    p.a.canonicalize();
    p.b.canonicalize();
    return p;
}

/// 1 + a + b >= 0 and 9 - 27a + b >= 0.
inline bool reality_condition(const NormParams& p) {
    p.validate();
    return 1 + p.a + p.b >= 0 && 9 - 27 * p.a + p.b >= 0;
}

/// (8a-2) z^3 + (-12a+b+5) z^2 + (6a-2) z - a, whose unique real root with
/// |z| >= 1 determines the right endpoint of the zero interval.
inline RationalPoly zeta0_cubic(const NormParams& p) {
    return RationalPoly({Rational(-p.a), Rational(6 * p.a - 2), Rational(-12 * p.a + p.b + 5), Rational(8 * p.a - 2)});
}

struct Zeta0Result {
    /// +infinity in the degenerate case a = 1/4.
    double zeta0 = 0.0;
    /// zeta0^2 / (1 - 2 zeta0)^3, or 0 when degenerate.
    double endpoint = 0.0;
    bool degenerate = false;
    /// Exact rational bracket of zeta0 (exact path, nondegenerate only).
    std::optional<RationalInterval> bracket;
};

inline double endpoint_from_zeta0(double z0) {
    const double d = 1.0 - 2.0 * z0;
    return z0 * z0 / (d * d * d);
}

/// zeta0 by exact Sturm isolation of the cubic on (-inf,-1] U [1,inf),
/// refined by exact bisection to about 2^-64 relative width.
inline Zeta0Result zeta0(const NormParams& p) {
    if (!reality_condition(p)) throw InvalidParams("zeta0: reality condition fails for these parameters");
    Zeta0Result r;
    if (8 * p.a - 2 == 0) {
        r.degenerate = true;
        r.zeta0 = std::numeric_limits<double>::infinity();
        r.endpoint = 0.0;
        return r;
    }
    const RationalPoly cubic = zeta0_cubic(p);
    const SturmChain chain(cubic);
    const int left = chain.count(RealBound::neg_inf(), RealBound(-1));
    const int right = chain.count(RealBound(1), RealBound::pos_inf()) + (chain.sign_at(Rational(1)) == 0 ? 1 : 0);
    if (left + right != 1) {
        throw NoRootInRegion("zeta0: expected exactly one root with |zeta| >= 1, found " + std::to_string(left + right));
    }
    RationalInterval bracket;
    if (chain.sign_at(Rational(1)) == 0) {
        bracket = {Rational(1), Rational(1)};
    } else if (chain.sign_at(Rational(-1)) == 0) {
        bracket = {Rational(-1), Rational(-1)};
    } else {
        // Exactly one distinct root lies in (-B, -1) or (1, B), where B is the
        // root bound; the squarefree part changes sign across it.
        const Rational bound = chain.cauchy_bound();
        RationalInterval region = left == 1 ? RationalInterval{-bound, Rational(-1)} : RationalInterval{Rational(1), bound};
        const double scale = std::max(1.0, std::abs(to_double(region.first)));
        bracket = refine_bracket(chain, region, scale * 0x1p-64);
    }
    r.zeta0 = to_double((bracket.first + bracket.second) / 2);
    r.endpoint = endpoint_from_zeta0(r.zeta0);
    r.bracket = bracket;
    return r;
}

/// Floating-point route for real-valued (a, b): closed-form cubic roots,
/// filtered to |zeta| >= 1 and Newton-polished.
inline Zeta0Result zeta0_float(double a, double b) {
    if (b < 0) throw InvalidParams("b must be >= 0");
    if (!(1 + a + b >= 0 && 9 - 27 * a + b >= 0)) {
        throw InvalidParams("zeta0: reality condition fails for these parameters");
    }
    Zeta0Result r;
    const double lead = 8 * a - 2;
    if (std::abs(lead) <= 1e-14) {
        r.degenerate = true;
        r.zeta0 = std::numeric_limits<double>::infinity();
        r.endpoint = 0.0;
        return r;
    }
    const FloatPoly cubic({-a, 6 * a - 2, -12 * a + b + 5, lead});
    const auto rs = complex_roots(cubic);
    std::vector<double> cands;
    for (const auto& z : rs.roots) {
        if (std::abs(z.imag()) > 1e-9 * (1 + std::abs(z))) continue;
        if (std::abs(z.real()) < 1 - 1e-10) continue;
        bool dup = false;
        for (double c : cands) dup = dup || std::abs(c - z.real()) <= 1e-10 * (1 + std::abs(c));
        if (!dup) cands.push_back(z.real());
    }
    if (cands.size() != 1) {
        throw NoRootInRegion("zeta0: expected exactly one root with |zeta| >= 1, found " + std::to_string(cands.size()));
    }
    double z = cands.front();
    const FloatPoly dcubic = cubic.derivative();
    for (int i = 0; i < 3; ++i) {
        double d = dcubic(z);
        if (d == 0.0) break;
        double nz = z - cubic(z) / d;
        if (!(std::abs(cubic(nz)) < std::abs(cubic(z)))) break;
        z = nz;
    }
    r.zeta0 = z;
    r.endpoint = endpoint_from_zeta0(z);
    return r;
}

/// A closed half-line, the set that contains every zero.
struct IntervalSpec {
    enum class Kind {
        LeftInfinite,   // (-inf, endpoint]
        RightInfinite,  // [endpoint, +inf)
    };
    Kind kind = Kind::LeftInfinite;
    double finite_endpoint = 0.0;

    bool contains(double z, double slack = 0.0) const {
        return kind == Kind::LeftInfinite ? z <= finite_endpoint + slack : z >= finite_endpoint - slack;
    }
};

inline IntervalSpec interval_H(const NormParams& p) {
    return {IntervalSpec::Kind::LeftInfinite, zeta0(p).endpoint};
}

/// Image of interval_H(normalize(g)) under z -> (c^3/a1) z - a0/a1.
inline IntervalSpec interval_P(const GeneralParams& g) {
    const NormParams p = normalize(g);
    const IntervalSpec h = interval_H(p);
    const Rational scale = g.c * g.c * g.c / g.a1;
    const Rational shift = -g.a0 / g.a1;
    IntervalSpec out;
    out.kind = scale > 0 ? IntervalSpec::Kind::LeftInfinite : IntervalSpec::Kind::RightInfinite;
    out.finite_endpoint = to_double(scale) * h.finite_endpoint + to_double(shift);
    if (scale == 1 && shift == 0) out.finite_endpoint = h.finite_endpoint;
    return out;
}

/// Sorted union of the real zeros of H_0..H_{m_max} inside the window
/// [endpoint - width, endpoint], with the widest gap between neighbours.
struct DensityProfile {
    double endpoint = 0.0;
    double window_lo = 0.0;
    std::vector<double> zeros;
    std::vector<int> orders;  // m for each entry of zeros
    double max_gap = 0.0;
};

inline DensityProfile density_profile(const NormParams& p, int m_max, double width, double tol = 1e-12) {
    if (!(width > 0)) throw InvalidParams("density: window width must be positive");
    DensityProfile out;
    out.endpoint = zeta0(p).endpoint;
    out.window_lo = out.endpoint - width;
    const PolySequence seq = gen_H(p, m_max);
    std::vector<std::pair<double, int>> all;
    for (int m = 1; m <= m_max; ++m) {
        const RationalPoly& h = seq[static_cast<std::size_t>(m)];
        if (h.degree() < 1) continue;
        const SturmChain chain(h);
        for (const auto& iv : chain.isolate()) {
            const double z = refine(chain, iv, tol);
            if (z >= out.window_lo && z <= out.endpoint) all.emplace_back(z, m);
        }
    }
    std::sort(all.begin(), all.end());
    for (const auto& [z, m] : all) {
        out.zeros.push_back(z);
        out.orders.push_back(m);
    }
    for (std::size_t i = 1; i < out.zeros.size(); ++i) out.max_gap = std::max(out.max_gap, out.zeros[i] - out.zeros[i - 1]);
    return out;
}

}  // namespace quadzeros

#endif  // QUADZEROS_ZEROLOCUS_HPP
