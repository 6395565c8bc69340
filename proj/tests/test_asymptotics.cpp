#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "quadzeros/asymptotics.hpp"

using namespace quadzeros;

namespace {

constexpr double kPi = std::numbers::pi;

RationalPoly rp(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

}  // namespace

TEST(Dominance, GoldenSampleIsInLimitSet) {
    const auto d = dominance({0, 1}, Complex(-1.618034, 0));
    EXPECT_NEAR(d.moduli[0], 0.61803398713846068, 1e-12);
    EXPECT_NEAR(d.moduli[1], 0.61803398713846068, 1e-12);
    EXPECT_NEAR(d.moduli[2], 1.6180339859373686, 1e-12);
    EXPECT_LT(d.gap, 1e-8);
    EXPECT_TRUE(d.in_limit_set);
}

TEST(Dominance, PositiveOneIsNot) {
    const auto d = dominance({0, 1}, Complex(1, 0));
    EXPECT_NEAR(d.moduli[0], 0.54368901269207636, 1e-12);
    EXPECT_NEAR(d.moduli[1], 1.3562030656262952, 1e-12);
    EXPECT_GT(d.gap, 1e-2);
    EXPECT_FALSE(d.in_limit_set);
}

TEST(Dominance, Guards) {
    EXPECT_THROW(dominance({0, 1}, Complex(0, 0)), InvalidParams);
    EXPECT_THROW(dominance({0, 1}, Complex(1, 0), 0.0), InvalidParams);
}

TEST(DominanceProperty, ConjugateClosureIsExact) {
    for (const RealParams& p : {RealParams{0, 1}, RealParams{-3, 1}, RealParams{1, 1}}) {
        for (double re = -2; re <= 2; re += 0.37) {
            for (double im : {0.01, 0.3, 1.7}) {
                const auto d = dominance(p, Complex(re, im));
                const auto e = dominance(p, Complex(re, -im));
                EXPECT_EQ(d.moduli, e.moduli);
            }
        }
    }
}

TEST(DominanceProperty, ThetaSamplesLieInLimitSet) {
    for (const RealParams& p : {RealParams{0, 1}, RealParams{-1.5, 1}, RealParams{0.3, 1}, RealParams{0.1, 0.5}}) {
        const auto ta = asymptote(p);
        for (int i = 1; i < 200; ++i) {
            const double t = kPi / 2 + kPi / 2 * i / 200.0;
            if (ta && std::abs(t - *ta) < 1e-3) continue;
            const double z = z_of_theta(p, t);
            if (z == 0.0) continue;
            EXPECT_TRUE(dominance(p, Complex(z, 0)).in_limit_set) << "theta=" << t;
        }
    }
}

TEST(Resultant, MatchesDeterminantOfKnownPair) {
    // Res(z^2 - 1, z - 2) = (2^2 - 1) = 3 with constant coefficients.
    const std::vector<RationalPoly> f{rp({-1}), rp({0}), rp({1})};
    const std::vector<RationalPoly> g{rp({-2}), rp({1})};
    EXPECT_EQ(sylvester_resultant(f, g), rp({3}));
}

TEST(Discriminant, EndpointValuesForOneOne) {
    const RationalPoly d = discriminant_in_x({1, 1});
    EXPECT_EQ(d(Rational(0)), 32);
    EXPECT_EQ(d(Rational(1)), -204);
}

TEST(DiscriminantProperty, EndpointFormulas) {
    for (const Rational& a : {Rational(-5), Rational(-1, 3), Rational(1, 7), Rational(1), Rational(9, 4)}) {
        for (const Rational& b : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
            const RationalPoly d = discriminant_in_x({a, b});
            const Rational b1 = b + 1;
            EXPECT_EQ(d(Rational(0)), 4 * a * b1 * b1 * b1);
            EXPECT_EQ(d(Rational(1)), -4 * (27 * a - b - 9) * (a * b * b + b + 1));
        }
    }
}

TEST(DiscriminantProperty, AgreesWithCubicFormulaAtRationalCosines) {
    for (const Rational& a : {Rational(-2), Rational(1, 5), Rational(1), Rational(7, 3)}) {
        for (const Rational& b : {Rational(0), Rational(1), Rational(5, 2)}) {
            const NormParams p{a, b};
            const RationalPoly d = discriminant_in_x(p);
            for (const Rational& c : {Rational(0), Rational(1, 3), Rational(-1, 2), Rational(3, 4), Rational(1)}) {
                const Rational A = -a;
                const Rational B = (2 - 6 * a) * c;
                const Rational C = 1 + b + (4 - 12 * a) * c * c;
                const Rational D = 2 * c - 8 * a * c * c * c;
                EXPECT_EQ(d(Rational(c * c)), oracle::cubic_discriminant(A, B, C, D));
            }
        }
    }
    EXPECT_THROW(discriminant_in_x({0, 1}), InvalidParams);
}

TEST(WitnessBelow, Examples) {
    for (const NormParams& p : {NormParams{-3, 1}, NormParams{Rational(-2001, 1000), 1}}) {
        const auto w = witness_below(p);
        EXPECT_EQ(w.regime, WitnessResult::Regime::ABelow);
        EXPECT_NE(w.witness_z.imag(), 0.0);
        EXPECT_LT(w.root_modulus, 1.0);
        EXPECT_NE(w.theta, kPi / 2);
        EXPECT_LT(w.factorization_residual, 1e-9);
        EXPECT_TRUE(dominance(RealParams(p), w.witness_z, 1e-7).in_limit_set);
    }
    EXPECT_NEAR(std::sqrt(2.0 / 3.0), 0.8165, 1e-4);
    EXPECT_THROW(witness_below({Rational(-3, 2), 1}), InvalidParams);
}

TEST(WitnessAbove, Examples) {
    const auto w = witness_above({1, 1});
    EXPECT_EQ(w.regime, WitnessResult::Regime::AAbove);
    ASSERT_TRUE(w.x_prime);
    ASSERT_TRUE(w.zeta_prime);
    EXPECT_GT(*w.x_prime, 0.0);
    EXPECT_LT(*w.x_prime, 1.0);
    EXPECT_LT(std::abs(*w.zeta_prime), 1.0);
    EXPECT_NE(w.witness_z.imag(), 0.0);
    EXPECT_LT(w.root_modulus, 1.0);
    EXPECT_TRUE(dominance({1, 1}, w.witness_z, 1e-7).in_limit_set);
    EXPECT_THROW(witness_above({Rational(3, 10), 1}), InvalidParams);
}

TEST(WitnessAbove, DoubleRootMatchesDenseDiscriminantScan) {
    for (const NormParams& p : {NormParams{1, 1}, NormParams{Rational(1, 2), 1}, NormParams{2, 3}, NormParams{Rational(4, 5), Rational(1, 2)}}) {
        const auto w = witness_above(p);
        const RationalPoly d = discriminant_in_x(p);
        const FloatPoly df = to_float(d);
        const auto brute = oracle::scan_roots([&](double x) { return df(x); }, 0.0, 1.0, 100000);
        ASSERT_EQ(brute.size(), 1u);
        EXPECT_NEAR(*w.x_prime, brute[0], 1e-10);
        // zeta' is a double root of f* at cos(theta) = sqrt(x').
        const double c = std::sqrt(*w.x_prime);
        const FloatPoly f = fstar_poly_cos(RealParams(p), c);
        EXPECT_NEAR(f(*w.zeta_prime), 0.0, 1e-8);
        EXPECT_NEAR(f.derivative()(*w.zeta_prime), 0.0, 1e-8);
        EXPECT_TRUE(dominance(RealParams(p), w.witness_z, 1e-7).in_limit_set);
    }
}

TEST(ConfirmNonreal, Examples) {
    const auto above = confirm_nonreal({1, 1}, 60);
    ASSERT_TRUE(above);
    EXPECT_LE(*above, 60);
    const auto below = confirm_nonreal({-3, 1}, 60);
    ASSERT_TRUE(below);
    EXPECT_LE(*below, 60);
    EXPECT_FALSE(confirm_nonreal({0, 1}, 60));
}

TEST(ConfirmNonreal, FirstIndexIsMinimal) {
    const auto m = confirm_nonreal({1, 1}, 60);
    ASSERT_TRUE(m);
    const auto seq = gen_H({1, 1}, *m);
    for (int k = 1; k < *m; ++k) EXPECT_TRUE(verdict(seq[static_cast<std::size_t>(k)]).all_real);
    EXPECT_FALSE(verdict(seq[static_cast<std::size_t>(*m)]).all_real);
}
