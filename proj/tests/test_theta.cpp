#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "quadzeros/realroots.hpp"
#include "quadzeros/theta.hpp"
#include "quadzeros/zerolocus.hpp"

using namespace quadzeros;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<RealParams> kCondParams{{0, 1}, {-1.5, 1}, {-1, 1}, {0.1, 0.5}, {0.2, 0.05}, {0.3, 1}, {0.35, 0.5}};

std::vector<double> theta_grid(const RealParams& p, int n) {
    std::vector<double> out;
    const auto ta = asymptote(p);
    for (int i = 1; i <= n; ++i) {
        const double t = kPi / 2 + kPi / 2 * i / (n + 1.0);
        if (ta && std::abs(t - *ta) < 1e-6) continue;
        out.push_back(t);
    }
    return out;
}

}  // namespace

TEST(FstarPoly, Examples) {
    const FloatPoly f = fstar_poly({0, 1}, 2 * kPi / 3);
    ASSERT_EQ(f.degree(), 2);
    EXPECT_NEAR(f.coeffs()[0], -1.0, 1e-15);
    EXPECT_NEAR(f.coeffs()[1], 3.0, 1e-15);
    EXPECT_NEAR(f.coeffs()[2], -1.0, 1e-15);

    const FloatPoly g = fstar_poly({0, 2.5}, kPi / 2);
    EXPECT_NEAR(g.coeffs()[0], 0.0, 1e-15);
    EXPECT_NEAR(g.coeffs()[1], 3.5, 1e-15);
    EXPECT_LE(g.degree(), 2);
    if (g.degree() == 2) {
        EXPECT_NEAR(g.coeffs()[2], 0.0, 1e-15);
    }

    const FloatPoly h = fstar_poly({1, 0}, kPi / 2);
    EXPECT_NEAR(h.coeffs()[0], 0.0, 1e-15);
    EXPECT_NEAR(h.coeffs()[1], 1.0, 1e-15);
    EXPECT_NEAR(h.coeffs()[2], 0.0, 1e-15);
    EXPECT_EQ(h.coeffs()[3], -1.0);

    EXPECT_THROW(fstar_poly({0, 1}, 0.0), InvalidParams);
    EXPECT_THROW(fstar_poly({0, 1}, kPi), InvalidParams);
}

TEST(ZetaBranch, GoldenExample) {
    EXPECT_NEAR(zeta_branch({0, 1}, 2 * kPi / 3), (3 + std::sqrt(5.0)) / 2, 1e-13);
}

TEST(ZetaBranch, SignFlipsAcrossAsymptote) {
    const RealParams p{0.3, 1};
    const double ta = *asymptote(p);
    EXPECT_NEAR(ta, std::acos(-1.0 / (2 * std::sqrt(0.3))), 1e-15);
    EXPECT_LT(zeta_branch(p, ta + 1e-4), 0.0);
    EXPECT_GT(zeta_branch(p, ta - 1e-4), 0.0);
    EXPECT_THROW(zeta_branch(p, ta + 1e-10), AsymptoteProximity);
}

TEST(ZetaBranch, NoErrorsOnDenseGridWithoutAsymptote) {
    for (const RealParams& p : {RealParams{0, 1}, RealParams{-1.5, 1}, RealParams{0.25, 0}, RealParams{0.2, 3}}) {
        EXPECT_FALSE(asymptote(p));
        for (double t : theta_grid(p, 4000)) {
            const double z = zeta_branch(p, t);
            EXPECT_GT(std::abs(z), 1.0);
        }
    }
}

TEST(ZetaBranch, Guards) {
    // (1/2, 1) violates the reality condition; past the asymptote f* has no root in (-1, 1).
    EXPECT_THROW(zeta_branch({0.5, 1}, *asymptote({0.5, 1}) + 0.1), BranchAmbiguity);
    EXPECT_THROW(zeta_branch({0, 1}, kPi / 2), InvalidParams);
    EXPECT_THROW(zeta_branch({0, 1}, 1.0), InvalidParams);
    EXPECT_THROW(zeta_branch({0, -1}, 2.0), InvalidParams);
}

TEST(Sample, GoldenExample) {
    const auto s = sample({0, 1}, 2 * kPi / 3);
    EXPECT_NEAR(s.zeta, 2.618034, 1e-6);
    EXPECT_NEAR(s.tau, 0.618034, 1e-6);
    EXPECT_NEAR(s.z, -1.618034, 1e-6);
    EXPECT_NEAR(s.z, -(1 + std::sqrt(5.0)) / 2, 1e-13);
    EXPECT_LT(s.residual, 1e-12);
    // Independent solve of D(t, z).
    const auto roots = oracle::cardano(s.z, -s.z, 1.0, 1.0);
    const Complex e = std::polar(s.tau, 2 * kPi / 3);
    for (const Complex& want : {e, std::conj(e), Complex(s.zeta * s.tau)}) {
        double best = 1e9;
        for (const auto& r : roots) best = std::min(best, std::abs(r - want));
        EXPECT_LT(best, 1e-12);
    }
}

TEST(Sample, EndpointLimits) {
    EXPECT_NEAR(z_of_theta({0, 0}, kPi - 1e-6), -4.0 / 27.0, 1e-9);
    for (const RealParams& p : {RealParams{0, 1}, RealParams{0.2, 0.5}, RealParams{-1.5, 1}}) {
        const double near_half_pi = kPi / 2 + 5e-5;
        EXPECT_LT(z_of_theta(p, near_half_pi), -1e6);
        EXPECT_GT(sample(p, near_half_pi).tau, 0.0);
    }
}

TEST(ThetaProperty, BranchResidualAndVieta) {
    for (const auto& p : kCondParams) {
        for (double t : theta_grid(p, 500)) {
            const auto s = sample(p, t);
            const double rho = 1 / s.zeta;
            EXPECT_LT(std::abs(rho), 1.0);
            EXPECT_LT(std::abs(fstar_poly(p, t)(rho)), 1e-10);
            EXPECT_GT(s.tau, 0.0);
            const Complex t0 = std::polar(s.tau, t), t1 = std::conj(t0);
            const double t2 = s.zeta * s.tau;
            const Complex sum = t0 + t1 + t2;
            const Complex prod = t0 * t1 * t2;
            const double want_sum = (p.b * s.z - p.a) / s.z;
            const double want_prod = -1 / s.z;
            EXPECT_NEAR(sum.real(), want_sum, 1e-9 * std::max(1.0, std::abs(want_sum)));
            EXPECT_NEAR(prod.real(), want_prod, 1e-9 * std::max(1.0, std::abs(want_prod)));
        }
    }
}

TEST(GM, Examples) {
    EXPECT_NEAR(g_m({0, 1}, 2 * kPi / 3, 2), -1 + std::pow((3 + std::sqrt(5.0)) / 2, -3), 1e-12);
    EXPECT_NEAR(g_m({0, 1}, 2 * kPi / 3, 2), -0.944272, 1e-6);
    const int m = 9;
    for (int h = 6; h <= 9; ++h) {
        const double t = h * kPi / (m + 1);
        const double zeta = zeta_branch({0, 1}, t);
        const double want = -std::pow(-1.0, h) + std::pow(zeta, -(m + 1));
        EXPECT_NEAR(g_m({0, 1}, t, m), want, 1e-12);
        EXPECT_EQ(std::signbit(g_m({0, 1}, t, m)), h % 2 == 0);
    }
    EXPECT_THROW(g_m({0, 1}, 2.0, -1), InvalidParams);
}

TEST(GM, IndexZeroHasNoZeros) {
    const auto reports = count_g_zeros({0, 1}, 0);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_EQ(reports[0].h, 1);
    EXPECT_DOUBLE_EQ(reports[0].lo, kPi / 2);
    EXPECT_DOUBLE_EQ(reports[0].hi, kPi);
    EXPECT_EQ(total_zero_count(reports), 0);
}

TEST(Subintervals, Layout) {
    const auto j = subintervals(10);
    ASSERT_EQ(j.size(), 6u);
    EXPECT_EQ(j.front().h, 6);
    EXPECT_EQ(j.back().h, 11);
    EXPECT_DOUBLE_EQ(j.front().lo, kPi / 2);
    EXPECT_DOUBLE_EQ(j.front().hi, 6 * kPi / 11);
    for (std::size_t i = 1; i < j.size(); ++i) EXPECT_DOUBLE_EQ(j[i].lo, j[i - 1].hi);
    EXPECT_DOUBLE_EQ(j.back().hi, kPi);
}

TEST(CountGZeros, FloorBound) {
    for (int m : {6, 10, 15, 24}) EXPECT_GE(total_zero_count(count_g_zeros({0, 1}, m, 10000)), m / 2) << m;
}

TEST(CountGZeros, AsymptoteIntervalHasTwoZeros) {
    const RealParams p{0.3, 1};
    const auto reports = count_g_zeros(p, 12, 10000);
    const double ta = *asymptote(p);
    int split = 0;
    for (const auto& r : reports) {
        if (!r.contains_asymptote) continue;
        ++split;
        EXPECT_LT(r.lo, ta);
        EXPECT_GT(r.hi, ta);
        EXPECT_GE(r.zero_count, 2);
    }
    EXPECT_EQ(split, 1);
    EXPECT_GE(total_zero_count(reports), 6);
}

TEST(CountGZeros, AgreesWithDenseScanOracle) {
    const RealParams p{0, 1};
    for (int m : {10, 17}) {
        auto g = [&](double t) { return g_m(p, t, m); };
        const auto brute = oracle::scan_roots(g, kPi / 2 + 1e-9, kPi - 1e-9, 200000);
        EXPECT_EQ(total_zero_count(count_g_zeros(p, m)), static_cast<int>(brute.size()));
    }
}

TEST(ThetaProperty, SignChangesMapToZerosOfH) {
    for (const auto& [p, np] : std::vector<std::pair<RealParams, NormParams>>{
             {{0, 1}, {0, 1}}, {{-1, 1}, {-1, 1}}, {{0.3, 1}, {Rational(3, 10), 1}}}) {
        for (int m : {8, 13}) {
            const RationalPoly h = gen_H(np, m)[static_cast<std::size_t>(m)];
            const FloatPoly hf = to_float(h);
            for (const auto& r : count_g_zeros(p, m)) {
                for (double t : r.zeros) {
                    const double z = z_of_theta(p, t);
                    double scale = 0;
                    for (std::size_t i = 0; i < hf.coeffs().size(); ++i) scale += std::abs(hf.coeffs()[i]) * std::pow(std::abs(z), i);
                    EXPECT_LT(std::abs(hf(z)), 1e-6 * scale) << "m=" << m << " theta=" << t;
                }
            }
        }
    }
}

TEST(ThetaProperty, SignNearPi) {
    for (const RealParams& p : {RealParams{0, 1}, RealParams{-1, 2}, RealParams{0.2, 0.5}}) {
        for (int m = 0; m <= 12; ++m) {
            const double g = g_m(p, kPi - 1e-7, m);
            EXPECT_EQ(g > 0, m % 2 == 0) << "m=" << m;
        }
    }
}

TEST(Monotonicity, Examples) {
    EXPECT_GT(monotonicity_scan({0, 1}, 10000), 0.0);
    EXPECT_GT(monotonicity_scan({-1.5, 1}, 10000), 0.0);
    for (double t : theta_grid({-1.5, 1}, 2000)) EXPECT_LT(z_of_theta({-1.5, 1}, t), 0.0);

    const RealParams p{0.3, 1};
    const double ta = *asymptote(p);
    EXPECT_GT(monotonicity_scan(p, 10000), 0.0);
    // zeta blows up at the asymptote but z passes through 0 there.
    EXPECT_LT(z_of_theta(p, ta - 1e-5), 0.0);
    EXPECT_GT(z_of_theta(p, ta + 1e-5), 0.0);
    EXPECT_LT(std::abs(z_of_theta(p, ta + 1e-5)), 1e-4);
    EXPECT_THROW(monotonicity_scan(p, 1), InvalidParams);
}
