#ifndef QUADZEROS_ASYMPTOTICS_HPP
#define QUADZEROS_ASYMPTOTICS_HPP

// Limit-set tests for the zeros of H_m as m grows.
//
// z lies in the limit set of the zeros iff the two smallest-modulus roots of
// D(t, z) have equal modulus. When the reality condition fails, a nonreal
// point of the limit set is built from a nonreal root of f*(., theta)
// inside the unit disk; confirm_nonreal turns that asymptotic statement into
// a finite, exact check.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadzeros/complex_roots.hpp"
#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/realroots.hpp"
#include "quadzeros/recurrence.hpp"
#include "quadzeros/theta.hpp"
#include "quadzeros/zerolocus.hpp"

namespace quadzeros {

struct DominanceResult {
    Complex z;
    std::array<double, 3> moduli{};  // ascending
    double gap = 0.0;                // moduli[1] - moduli[0]
    bool in_limit_set = false;
};

/// Equal-modulus test on the roots of D(t, z), relative tolerance tol.
/// Roots for Im z < 0 are the conjugates of those for conj(z), so the
/// moduli are symmetric under conjugation exactly.
inline DominanceResult dominance(const RealParams& p, Complex z, double tol = 1e-8) {
    if (z == Complex(0.0)) throw InvalidParams("dominance: z must be nonzero");
    if (!(tol > 0)) throw InvalidParams("dominance: tol must be positive");
    const Complex zc = z.imag() < 0 ? std::conj(z) : z;
    const ComplexPoly d({Complex(1.0), Complex(1.0), Complex(p.a) - p.b * zc, zc});
    const auto rs = complex_roots(d);
    DominanceResult r;
    r.z = z;
    for (std::size_t i = 0; i < 3; ++i) r.moduli[i] = std::abs(rs.roots[i]);
    std::sort(r.moduli.begin(), r.moduli.end());
    r.gap = r.moduli[1] - r.moduli[0];
    r.in_limit_set = r.gap < tol * r.moduli[1];
    return r;
}

/// Sylvester resultant of two polynomials whose coefficients (ascending in
/// the main variable) are themselves polynomials over Q. Computed by
/// fraction-free Bareiss elimination, so every division is exact.
inline RationalPoly sylvester_resultant(const std::vector<RationalPoly>& f, const std::vector<RationalPoly>& g) {
    if (f.empty() || g.empty() || f.back().is_zero() || g.back().is_zero()) {
        throw InvalidParams("sylvester_resultant: leading coefficients must be nonzero");
    }
    const std::size_t n = f.size() - 1;
    const std::size_t m = g.size() - 1;
    const std::size_t size = n + m;
    if (size == 0) return RationalPoly::constant(1);
    std::vector<std::vector<RationalPoly>> mat(size, std::vector<RationalPoly>(size));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= n; ++k) mat[i][i + k] = f[n - k];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) mat[m + i][i + k] = g[m - k];
    }
    int sign = 1;
    RationalPoly prev = RationalPoly::constant(1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < size && mat[piv][k].is_zero()) ++piv;
            if (piv == size) return {};
            std::swap(mat[k], mat[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                RationalPoly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero()) throw InvariantViolation("sylvester_resultant: inexact Bareiss division");
                mat[i][j] = std::move(q);
            }
            mat[i][k] = RationalPoly{};
        }
        prev = mat[k][k];
    }
    RationalPoly det = mat[size - 1][size - 1];
    return sign > 0 ? det : -det;
}

/// Coefficients of f*(zeta, theta) in zeta as polynomials in c = cos(theta).
inline std::vector<RationalPoly> fstar_coeffs_in_cos(const NormParams& p) {
    return {
        RationalPoly({0, 2, 0, Rational(-8 * p.a)}),
        RationalPoly({Rational(1 + p.b), 0, Rational(4 - 12 * p.a)}),
        RationalPoly({0, Rational(2 - 6 * p.a)}),
        RationalPoly::constant(Rational(-p.a)),
    };
}

/// Discriminant in zeta of f*(zeta, theta) as a polynomial in x = cos^2(theta),
/// via disc = -Res(f*, df*/dzeta) / lc for the cubic.
inline RationalPoly discriminant_in_x(const NormParams& p) {
    if (p.a == 0) throw InvalidParams("discriminant_in_x: f* is not cubic when a = 0");
    const auto f = fstar_coeffs_in_cos(p);
    std::vector<RationalPoly> df;
    for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * Rational(static_cast<long>(k)));
    const RationalPoly res = sylvester_resultant(f, df);
    const RationalPoly disc_c = -res * Rational(1 / f.back().leading());
    std::vector<Rational> in_x;
    for (std::size_t i = 0; i < disc_c.coeffs().size(); ++i) {
        if (i % 2 == 1) {
            if (disc_c.coeffs()[i] != 0) throw InvariantViolation("discriminant_in_x: odd power of cos(theta)");
            continue;
        }
        in_x.push_back(disc_c.coeffs()[i]);
    }
    return RationalPoly(std::move(in_x));
}

struct WitnessResult {
    enum class Regime { ABelow, AAbove };
    Regime regime = Regime::ABelow;
    /// Nonreal point of the limit set of zeros.
    Complex witness_z;
    /// Nonreal root of f*(., theta) inside the unit disk.
    Complex fstar_root;
    double theta = 0.0;
    double root_modulus = 0.0;
    /// max relative |D(t, z)| at tau e^{+-i theta} and tau / fstar_root.
    double factorization_residual = 0.0;
    /// Smallest m <= cap with a nonreal zero, when confirmation ran.
    std::optional<int> confirmed_m;
    /// Above-regime certificate: the root x' of the discriminant and the
    /// double root zeta' of f* at cos(theta) = sqrt(x').
    std::optional<double> x_prime;
    std::optional<double> zeta_prime;
};

inline const char* to_string(WitnessResult::Regime r) {
    return r == WitnessResult::Regime::ABelow ? "a_below" : "a_above";
}

/// Smallest m in [1, m_cap] for which H_m has a nonreal zero (exact).
inline std::optional<int> confirm_nonreal(const NormParams& p, int m_cap = 60) {
    const PolySequence seq = gen_H(p, m_cap);
    for (int m = 1; m <= m_cap; ++m) {
        const RationalPoly& h = seq[static_cast<std::size_t>(m)];
        if (h.degree() < 1) continue;
        if (!verdict(h).all_real) return m;
    }
    return std::nullopt;
}

namespace detail {

/// Given cos(theta*) = c, looks for a nonreal root rho of f* with |rho| < 1
/// whose induced z = -rho / tau^3, tau = -rho - 2c, is nonreal.
inline std::optional<WitnessResult> try_witness_at(const RealParams& p, double c) {
    const FloatPoly f = fstar_poly_cos(p, c);
    if (f.degree() < 1) return std::nullopt;
    const auto rs = complex_roots(f);
    for (const auto& rho : rs.roots) {
        if (!(rho.imag() > 1e-9 * (1 + std::abs(rho)))) continue;
        if (!(std::abs(rho) < 1 - 1e-12)) continue;
        const Complex tau = -rho - 2.0 * c;
        const Complex z = -rho / (tau * tau * tau);
        if (!(std::abs(z.imag()) > 1e-12 * std::abs(z))) continue;
        WitnessResult w;
        w.witness_z = z;
        w.fstar_root = rho;
        w.theta = std::acos(c);
        w.root_modulus = std::abs(rho);
        const Complex e = std::polar(1.0, w.theta);
        for (const auto& t : {tau * e, tau * std::conj(e), tau / rho}) {
            w.factorization_residual = std::max(w.factorization_residual, denominator_residual(p, z, t));
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace detail

inline constexpr int kWitnessScanSteps = 64;

/// confirm_cap > 0 additionally runs confirm_nonreal up to that index.
///
/// Witness for a < -b - 1: at theta = pi/2 the roots of f* are 0 and
/// +-i sqrt(-(1+b)/a), inside the unit disk; scan theta* -> pi/2.
inline WitnessResult witness_below(const NormParams& np, int confirm_cap = 0,
                                   int steps = kWitnessScanSteps) {
    np.validate();
    if (!(np.a < -np.b - 1)) throw InvalidParams("witness_below: requires a < -b - 1");
    const RealParams p(np);
    const double r0 = std::sqrt(-(1 + p.b) / p.a);
    if (!(r0 < 1)) throw WitnessSearchFailed("witness_below: sqrt(-(1+b)/a) is not below 1");
    double delta = 0.25;
    for (int k = 0; k < steps && delta > 1e-14; ++k, delta *= 0.5) {
        if (auto w = detail::try_witness_at(p, std::cos(std::numbers::pi / 2 + delta))) {
            w->regime = WitnessResult::Regime::ABelow;
            if (confirm_cap > 0) w->confirmed_m = confirm_nonreal(np, confirm_cap);
            return *w;
        }
    }
    throw WitnessSearchFailed("witness_below: no qualifying theta found within the scan budget");
}

/// Witness for a > (b + 9)/27 through the unique root x' in (0, 1) of the
/// discriminant and the double root zeta' of f* at cos(theta) = sqrt(x').
inline WitnessResult witness_above(const NormParams& np, int confirm_cap = 0,
                                   int steps = kWitnessScanSteps) {
    np.validate();
    if (!(27 * np.a > np.b + 9)) throw InvalidParams("witness_above: requires a > (b + 9)/27");
    const RationalPoly delta_poly = discriminant_in_x(np);
    const SturmChain chain(delta_poly);
    const auto roots = chain.isolate();
    if (roots.size() != 1) {
        throw UniqueRootViolation("witness_above: discriminant has " + std::to_string(roots.size()) + " real roots");
    }
    if (chain.sign_at(Rational(0)) == 0 || chain.sign_at(Rational(1)) == 0 ||
        chain.count(Rational(0), Rational(1)) != 1) {
        throw UniqueRootViolation("witness_above: discriminant root is not inside (0, 1)");
    }
    const double xp = refine(chain, roots.front(), 1e-18);
    const double a = to_double(np.a);
    const double b = to_double(np.b);
    const double zeta_p = -std::sqrt(xp) * (-3 * a * (b + 8 * xp - 2) + b + 4 * xp + 1) / (3 * a * (b - 4 * xp + 1) + 4 * xp);
    if (!(std::abs(zeta_p) < 1)) throw WitnessSearchFailed("witness_above: double root zeta' is not inside the unit disk");

    const RealParams p(np);
    const double c0 = std::sqrt(xp);
    double delta = 0.5 * (1 - c0);
    for (int k = 0; k < steps && delta > 1e-15; ++k, delta *= 0.5) {
        if (auto w = detail::try_witness_at(p, c0 + delta)) {
            w->regime = WitnessResult::Regime::AAbove;
            w->x_prime = xp;
            w->zeta_prime = zeta_p + 0.0;  // no "-0" in output
            if (confirm_cap > 0) w->confirmed_m = confirm_nonreal(np, confirm_cap);
            return *w;
        }
    }
    throw WitnessSearchFailed("witness_above: no qualifying theta found within the scan budget");
}

}  // namespace quadzeros

#endif  // QUADZEROS_ASYMPTOTICS_HPP
