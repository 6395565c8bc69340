#ifndef QUADZEROS_RECURRENCE_HPP
#define QUADZEROS_RECURRENCE_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/rational.hpp"

namespace quadzeros {

/// Raw coefficients of C(z) = c, B(z) = b0 + b1 z, A(z) = a0 + a1 z.
struct GeneralParams {
    Rational c, b0, b1, a0, a1;

    /// Throws InvalidParams unless c*a1 != 0 and c*a1*b1 <= 0.
    void validate() const {
        if (c * a1 == 0) throw InvalidParams("c*a1 must be nonzero");
        if (c * a1 * b1 > 0) throw InvalidParams("c*a1*b1 must be <= 0 (the case c*a1*b1 > 0 is not covered)");
    }
};

/// Normalized parameters of the reduced generating function
/// 1 / (1 + t + a t^2 + z t^2 (t - b)).
struct NormParams {
    Rational a, b;

    void validate() const {
        if (b < 0) throw InvalidParams("b must be >= 0");
    }
};

struct PolySequence {
    std::variant<NormParams, GeneralParams> params;
    std::vector<RationalPoly> polys;

    const RationalPoly& operator[](std::size_t m) const { return polys.at(m); }
    std::size_t size() const noexcept { return polys.size(); }
};

inline constexpr int kDefaultMaxM = 512;

namespace detail {

inline void check_m_max(int m_max, int cap) {
    if (m_max < 0) throw InvalidParams("m_max must be >= 0");
    if (m_max > cap) {
        throw InvalidParams("m_max " + std::to_string(m_max) + " exceeds cap " + std::to_string(cap));
    }
}

/// Runs Q_m = -(c1 Q_{m-1} + c2 Q_{m-2} + c3 Q_{m-3}) from Q_0 = 1.
inline std::vector<RationalPoly> run_recurrence(const RationalPoly& c1, const RationalPoly& c2, const RationalPoly& c3,
                                                int m_max) {
    std::vector<RationalPoly> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    out.push_back(RationalPoly::constant(1));
    for (int m = 1; m <= m_max; ++m) {
        const auto i = static_cast<std::size_t>(m);
        RationalPoly next = c1 * out[i - 1];
        if (m >= 2) next += c2 * out[i - 2];
        if (m >= 3) next += c3 * out[i - 3];
        out.push_back(-next);
    }
    return out;
}

}  // namespace detail

/// H_0..H_{m_max} from H_m + H_{m-1} + (a - b z) H_{m-2} + z H_{m-3} = 0.
inline PolySequence gen_H(const NormParams& p, int m_max, int cap = kDefaultMaxM) {
    p.validate();
    detail::check_m_max(m_max, cap);
    const RationalPoly one = RationalPoly::constant(1);
    const RationalPoly quad({p.a, Rational(-p.b)});
    const RationalPoly cubic = RationalPoly::variable();
    return {p, detail::run_recurrence(one, quad, cubic, m_max)};
}

/// P_0..P_{m_max} from P_m + c P_{m-1} + B(z) P_{m-2} + A(z) P_{m-3} = 0.
inline PolySequence gen_P(const GeneralParams& g, int m_max, int cap = kDefaultMaxM) {
    g.validate();
    detail::check_m_max(m_max, cap);
    return {g, detail::run_recurrence(RationalPoly::constant(g.c), RationalPoly({g.b0, g.b1}), RationalPoly({g.a0, g.a1}),
                                      m_max)};
}

/// Independent route to H_m: expands 1/D(t,z) as the geometric series
/// sum_j (-u)^j with u = t + (a - b z) t^2 + z t^3, truncated at t^{m_max}.
/// Quadratic in m_max more work than gen_H; meant for cross-checking.
inline PolySequence series_oracle(const NormParams& p, int m_max, int cap = kDefaultMaxM) {
    p.validate();
    detail::check_m_max(m_max, cap);
    const std::size_t n = static_cast<std::size_t>(m_max) + 1;

    // Bivariate series stored as t-coefficient vectors of polynomials in z.
    using Series = std::vector<RationalPoly>;
    Series neg_u(n);
    if (n > 1) neg_u[1] = RationalPoly::constant(-1);
    if (n > 2) neg_u[2] = RationalPoly({Rational(-p.a), p.b});
    if (n > 3) neg_u[3] = RationalPoly({0, -1});

    Series sum(n);
    sum[0] = RationalPoly::constant(1);
    Series term = sum;
    for (std::size_t j = 1; j < n; ++j) {
        Series next(n);
        // term has no t-coefficients below t^{j-1}; neg_u starts at t^1.
        for (std::size_t i = j - 1; i < n; ++i) {
            if (term[i].is_zero()) continue;
            for (std::size_t k = 1; k <= 3 && i + k < n; ++k) next[i + k] += term[i] * neg_u[k];
        }
        term = std::move(next);
        for (std::size_t i = j; i < n; ++i) sum[i] += term[i];
    }
    return {p, std::move(sum)};
}

}  // namespace quadzeros

#endif  // QUADZEROS_RECURRENCE_HPP
