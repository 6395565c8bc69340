#ifndef QUADZEROS_COMPLEX_ROOTS_HPP
#define QUADZEROS_COMPLEX_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"

namespace quadzeros {

using Complex = std::complex<double>;

/// All complex roots of a polynomial together with |p(root)|.
struct ComplexRootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;
};

namespace detail {

/// Magnitude of the terms summed when evaluating p at x; the natural scale
/// for the rounding error of p(x).
inline double evaluation_scale(const ComplexPoly& p, Complex x) {
    double s = 0.0;
    double ax = std::abs(x);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) s = s * ax + std::abs(*it);
    return s;
}

inline Complex quadratic_root_pair(Complex b, Complex c, Complex& other) {
    // Monic z^2 + b z + c, cancellation-free form.
    Complex disc = std::sqrt(b * b - 4.0 * c);
    if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
    Complex q = -0.5 * (b + disc);
    if (q == Complex(0.0)) {
        other = Complex(0.0);
        return Complex(0.0);
    }
    other = c / q;
    return q;
}

inline void newton_polish(const ComplexPoly& p, const ComplexPoly& dp, Complex& r) {
    Complex fr = p(r);
    for (int it = 0; it < 4; ++it) {
        Complex d = dp(r);
        if (d == Complex(0.0)) return;
        Complex cand = r - fr / d;
        Complex fc = p(cand);
        if (!(std::abs(fc) < std::abs(fr))) return;
        r = cand;
        fr = fc;
    }
}

inline std::vector<Complex> aberth(const ComplexPoly& p) {
    const int n = p.degree();
    const auto& c = p.coeffs();
    const ComplexPoly dp = p.derivative();

    // Initial guesses on a circle whose radius is the geometric mean of the
    // root moduli, rotated off the real axis to break conjugate symmetry.
    double radius = std::pow(std::abs(c[0] / c[static_cast<std::size_t>(n)]), 1.0 / n);
    if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> done(z.size(), false);
    for (int iter = 0; iter < 800; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            Complex f = p(z[i]);
            if (std::abs(f) <= 4.0 * eps * evaluation_scale(p, z[i])) {
                done[i] = true;
                continue;
            }
            all_done = false;
            Complex w = f / dp(z[i]);
            Complex s(0.0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) s += 1.0 / (z[i] - z[j]);
            }
            Complex corr = w / (1.0 - w * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = w;
            z[i] -= corr;
            if (std::abs(corr) <= 2.0 * eps * std::abs(z[i])) done[i] = true;
        }
        if (all_done) break;
    }
    for (auto& r : z) newton_polish(p, dp, r);
    return z;
}

}  // namespace detail

/// Roots of a complex-coefficient polynomial of degree >= 1.
///
/// Degrees 1 and 2 use closed forms; higher degrees use Aberth-Ehrlich
/// iteration followed by Newton polishing. Exact zero roots are deflated
/// first. Every residual is checked against tol times the evaluation scale
/// sum_i |c_i| |r|^i; a violation raises RootFinderFailure.
inline ComplexRootSet complex_roots(const ComplexPoly& input, double tol = 1e-12) {
    if (input.degree() < 1) throw InvalidParams("complex_roots: degree must be at least 1");
    if (std::abs(input.leading()) <= 1e-300) {
        throw DegenerateLeadingCoefficient("complex_roots: leading coefficient vanishes at working precision");
    }

    std::vector<Complex> roots;
    std::vector<Complex> c = input.coeffs();
    std::size_t zeros = 0;
    while (zeros < c.size() - 1 && c[zeros] == Complex(0.0)) ++zeros;
    roots.assign(zeros, Complex(0.0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    ComplexPoly p(c);

    if (p.degree() == 1) {
        roots.push_back(-c[0]);
    } else if (p.degree() == 2) {
        Complex other;
        Complex r = detail::quadratic_root_pair(c[1], c[0], other);
        roots.push_back(r);
        roots.push_back(other);
    } else if (p.degree() >= 3) {
        auto rs = detail::aberth(p);
        roots.insert(roots.end(), rs.begin(), rs.end());
    }

    ComplexRootSet out;
    out.roots = std::move(roots);
    out.residuals.reserve(out.roots.size());
    for (const auto& r : out.roots) {
        double res = std::abs(input(r));
        double scale = detail::evaluation_scale(input, r);
        if (!(res <= tol * scale)) {
            throw RootFinderFailure("complex_roots: residual bound not met");
        }
        out.residuals.push_back(res);
    }
    return out;
}

inline ComplexRootSet complex_roots(const FloatPoly& p, double tol = 1e-12) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    return complex_roots(ComplexPoly(std::move(c)), tol);
}

}  // namespace quadzeros

#endif  // QUADZEROS_COMPLEX_ROOTS_HPP
