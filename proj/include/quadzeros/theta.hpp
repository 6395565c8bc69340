#ifndef QUADZEROS_THETA_HPP
#define QUADZEROS_THETA_HPP

// Parametrization of the zero interval by an angle theta in (pi/2, pi).
//
// For each theta the three roots of D(t, z) = 1 + t + a t^2 + z t^2 (t - b)
// are written as tau e^{+-i theta} and zeta tau, where 1/zeta is the unique
// root of the reciprocal cubic f*(., theta) inside (-1, 1). Then
//   tau = -1/zeta - 2 cos(theta),   z = -1 / (zeta tau^3),
// and z(theta) sweeps the zero interval monotonically. The zeros of H_m
// correspond to the zeros of g_m(theta).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "quadzeros/complex_roots.hpp"
#include "quadzeros/errors.hpp"
#include "quadzeros/polynomial.hpp"
#include "quadzeros/recurrence.hpp"

namespace quadzeros {

/// Floating-point view of the normalized parameters.
struct RealParams {
    double a = 0.0;
    double b = 0.0;

    RealParams() = default;
    RealParams(double a_, double b_) : a(a_), b(b_) {}
    RealParams(const NormParams& p) : a(to_double(p.a)), b(to_double(p.b)) {}  // NOLINT(google-explicit-constructor)
};

inline constexpr double kAsymptoteExclusion = 1e-9;

namespace detail {

inline void require_theta_open(double theta, double lo, double hi, const char* what) {
    if (!(theta > lo && theta < hi)) throw InvalidParams(std::string(what) + ": theta out of range");
}

}  // namespace detail

/// theta at which 1/zeta(theta) vanishes: arccos(-1/(2 sqrt a)), a > 1/4 only.
inline std::optional<double> asymptote(const RealParams& p) {
    if (!(p.a > 0.25)) return std::nullopt;
    return std::acos(-1.0 / (2.0 * std::sqrt(p.a)));
}

/// f*(zeta, theta) = -a zeta^3 + (2 - 6a) x zeta^2 + (1 + b + (4 - 12a) x^2) zeta
///                  + 2x - 8a x^3,  x = cos(theta).
inline FloatPoly fstar_poly_cos(const RealParams& p, double x) {
    return FloatPoly({2 * x - 8 * p.a * x * x * x, 1 + p.b + 4 * x * x - 12 * p.a * x * x, 2 * x - 6 * p.a * x, -p.a});
}

inline FloatPoly fstar_poly(const RealParams& p, double theta) {
    detail::require_theta_open(theta, 0.0, std::numbers::pi, "fstar_poly");
    return fstar_poly_cos(p, std::cos(theta));
}

/// The unique real root of f*(., theta) in (-1, 1); i.e. 1/zeta(theta).
inline double branch_root(const RealParams& p, double theta) {
    detail::require_theta_open(theta, std::numbers::pi / 2, std::numbers::pi, "zeta_branch");
    if (p.b < 0) throw InvalidParams("b must be >= 0");
    if (auto ta = asymptote(p); ta && std::abs(theta - *ta) < kAsymptoteExclusion) {
        throw AsymptoteProximity("zeta_branch: theta within exclusion radius of the asymptote");
    }
    const double x = std::cos(theta);
    const FloatPoly f = fstar_poly_cos(p, x);
    if (f.degree() < 1) throw BranchAmbiguity("zeta_branch: f* is constant");
    const auto rs = complex_roots(f);
    std::optional<double> pick;
    int count = 0;
    for (const auto& r : rs.roots) {
        if (std::abs(r.imag()) > 1e-9 * (1 + std::abs(r))) continue;
        if (!(std::abs(r.real()) < 1 - 1e-12)) continue;
        ++count;
        pick = r.real();
    }
    if (count != 1) {
        throw BranchAmbiguity("zeta_branch: f* has " + std::to_string(count) + " real roots in (-1,1)");
    }
    double rho = *pick;
    const FloatPoly df = f.derivative();
    for (int i = 0; i < 4; ++i) {
        const double d = df(rho);
        if (d == 0.0) break;
        const double next = rho - f(rho) / d;
        if (!(std::abs(f(next)) < std::abs(f(rho)))) break;
        rho = next;
    }
    if (rho == 0.0) throw AsymptoteProximity("zeta_branch: 1/zeta vanishes");
    return rho;
}

/// zeta(theta); |zeta| > 1.
inline double zeta_branch(const RealParams& p, double theta) { return 1.0 / branch_root(p, theta); }

struct ThetaSample {
    double theta = 0.0;
    double zeta = 0.0;
    double tau = 0.0;
    double z = 0.0;
    /// max_k |D(t_k, z)| / sum_i |d_i| |t_k|^i over the three predicted roots.
    double residual = 0.0;
};

/// tau = -rho - 2 cos(theta), polished on a tau^3 + 2c tau^2 + (4c^2 - 1 - b) tau - 2bc
/// so that small tau near pi/2 keeps its relative accuracy.
inline double tau_of(const RealParams& p, double c, double rho) {
    double tau = -rho - 2 * c;
    const FloatPoly q({-2 * p.b * c, 4 * c * c - 1 - p.b, 2 * c, p.a});
    const FloatPoly dq = q.derivative();
    for (int i = 0; i < 4; ++i) {
        const double d = dq(tau);
        if (d == 0.0) break;
        const double next = tau - q(tau) / d;
        if (!(std::abs(q(next)) < std::abs(q(tau)))) break;
        tau = next;
    }
    if (!(tau > 0)) throw FactorizationMismatch("sample: tau is not positive (b = 0 degenerate branch)");
    return tau;
}

/// z(theta) alone, without the factorization check.
inline double z_of_theta(const RealParams& p, double theta) {
    const double rho = branch_root(p, theta);
    const double tau = tau_of(p, std::cos(theta), rho);
    return -rho / (tau * tau * tau);
}

/// Relative residual of D(t, z) at t; D(t, z) = 1 + t + (a - b z) t^2 + z t^3.
inline double denominator_residual(const RealParams& p, Complex z, Complex t) {
    const ComplexPoly d({Complex(1.0), Complex(1.0), Complex(p.a) - p.b * z, z});
    return std::abs(d(t)) / detail::evaluation_scale(d, t);
}

inline ThetaSample sample(const RealParams& p, double theta) {
    ThetaSample s;
    s.theta = theta;
    const double rho = branch_root(p, theta);
    s.zeta = 1.0 / rho;
    s.tau = tau_of(p, std::cos(theta), rho);
    s.z = -rho / (s.tau * s.tau * s.tau);
    const Complex t0 = std::polar(s.tau, -theta);
    const Complex t1 = std::polar(s.tau, theta);
    const Complex t2(s.zeta * s.tau, 0.0);
    for (const auto& t : {t0, t1, t2}) s.residual = std::max(s.residual, denominator_residual(p, s.z, t));
    if (!(s.residual <= 1e-8)) throw FactorizationMismatch("sample: D(t, z) does not vanish at the predicted roots");
    return s;
}

/// (zeta - cos t) sin((m+1) t) / sin t - cos((m+1) t) + zeta^{-(m+1)}.
inline double g_m(const RealParams& p, double theta, int m) {
    if (m < 0) throw InvalidParams("g_m: m must be >= 0");
    const double rho = branch_root(p, theta);
    const double zeta = 1.0 / rho;
    const double k = m + 1.0;
    // zeta^{-(m+1)} = rho^{m+1}, |rho| < 1; underflow to 0 is harmless.
    return (zeta - std::cos(theta)) * std::sin(k * theta) / std::sin(theta) - std::cos(k * theta) + std::pow(rho, k);
}

/// Counting interval J_h with h in [floor((m+1)/2) + 1, m + 1].
struct SubintervalReport {
    int h = 0;
    double lo = 0.0;
    double hi = 0.0;
    int zero_count = 0;
    bool contains_asymptote = false;
    /// Refined locations of the counted sign changes.
    std::vector<double> zeros;
};

/// The intervals J_h, without counting.
inline std::vector<SubintervalReport> subintervals(int m) {
    if (m < 0) throw InvalidParams("subintervals: m must be >= 0");
    std::vector<SubintervalReport> out;
    const int first = (m + 1) / 2 + 1;
    const double step = std::numbers::pi / (m + 1);
    for (int h = first; h <= m + 1; ++h) {
        SubintervalReport r;
        r.h = h;
        r.lo = h == first ? std::numbers::pi / 2 : (h - 1) * step;
        r.hi = h * step;
        out.push_back(r);
    }
    return out;
}

namespace detail {

/// Bisection to a sign change of g_m between lo and hi (signs differ).
inline double bisect_g(const RealParams& p, int m, double lo, double hi, double glo) {
    for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g_m(p, mid, m);
        if (gm == 0.0) return mid;
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Sign changes of g_m over the open piece (lo, hi), sampled on
/// Chebyshev-clustered nodes so that both ends are resolved finely.
inline void scan_piece(const RealParams& p, int m, double lo, double hi, int nodes, std::vector<double>& zeros) {
    if (!(hi > lo)) return;
    double prev_t = 0.0;
    double prev_g = 0.0;
    bool have_prev = false;
    for (int i = 1; i < nodes; ++i) {
        const double u = 0.5 * (1.0 - std::cos(std::numbers::pi * i / nodes));
        const double t = lo + (hi - lo) * u;
        if (!(t > lo && t < hi)) continue;
        const double g = g_m(p, t, m);
        if (have_prev && ((g > 0 && prev_g < 0) || (g < 0 && prev_g > 0))) {
            zeros.push_back(bisect_g(p, m, prev_t, t, prev_g));
        } else if (g == 0.0) {
            zeros.push_back(t);
        }
        prev_t = t;
        prev_g = g;
        have_prev = g != 0.0;
    }
}

}  // namespace detail

/// Per-J_h sign-change counts of g_m. When a > 1/4 the interval containing
/// the asymptote is split there (with the exclusion radius removed) so the
/// pole is never counted as a zero. Reports; never asserts the bound.
inline std::vector<SubintervalReport> count_g_zeros(const RealParams& p, int m, int grid = 4096) {
    if (grid < 2) throw InvalidParams("count_g_zeros: grid must be >= 2");
    auto reports = subintervals(m);
    if (reports.empty()) return reports;
    const int nodes = std::max(64, grid / static_cast<int>(reports.size()));
    const auto ta = asymptote(p);
    for (auto& r : reports) {
        if (ta && *ta > r.lo && *ta < r.hi) {
            r.contains_asymptote = true;
            detail::scan_piece(p, m, r.lo, *ta - kAsymptoteExclusion, nodes, r.zeros);
            detail::scan_piece(p, m, *ta + kAsymptoteExclusion, r.hi, nodes, r.zeros);
        } else {
            detail::scan_piece(p, m, r.lo, r.hi, nodes, r.zeros);
        }
        r.zero_count = static_cast<int>(r.zeros.size());
    }
    return reports;
}

inline int total_zero_count(const std::vector<SubintervalReport>& reports) {
    int n = 0;
    for (const auto& r : reports) n += r.zero_count;
    return n;
}

/// Smallest forward difference z(theta_{i+1}) - z(theta_i) over a uniform
/// grid on (pi/2, pi), skipping 1e-6 around the asymptote and never
/// differencing across it. Positive means strictly increasing on the grid.
inline double monotonicity_scan(const RealParams& p, int grid) {
    if (grid < 2) throw InvalidParams("monotonicity_scan: grid must be >= 2");
    constexpr double half_pi = std::numbers::pi / 2;
    const auto ta = asymptote(p);
    double worst = std::numeric_limits<double>::infinity();
    bool have_prev = false;
    double prev_z = 0.0;
    int prev_side = 0;
    for (int i = 1; i <= grid; ++i) {
        const double theta = half_pi + half_pi * i / (grid + 1.0);
        int side = 0;
        if (ta) {
            if (std::abs(theta - *ta) < 1e-6) {
                have_prev = false;
                continue;
            }
            side = theta < *ta ? -1 : 1;
        }
        const double z = z_of_theta(p, theta);
        if (have_prev && side == prev_side) worst = std::min(worst, z - prev_z);
        have_prev = true;
        prev_z = z;
        prev_side = side;
    }
    return worst;
}

}  // namespace quadzeros

#endif  // QUADZEROS_THETA_HPP
