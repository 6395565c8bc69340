#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quadzeros/recurrence.hpp"
#include "quadzeros/zerolocus.hpp"

using namespace quadzeros;

namespace {

RationalPoly rp(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

RationalPoly from_map(const std::map<int, Rational>& m) {
    if (m.empty()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(m.rbegin()->first) + 1, Rational(0));
    for (const auto& [d, c] : m) v[static_cast<std::size_t>(d)] = c;
    return RationalPoly(std::move(v));
}

std::vector<NormParams> rational_grid() {
    std::vector<NormParams> out;
    for (const Rational& a : {Rational(-3), Rational(-1, 2), Rational(0), Rational(1, 4), Rational(1, 3), Rational(7, 5)}) {
        for (const Rational& b : {Rational(0), Rational(1, 2), Rational(1), Rational(5, 2)}) out.push_back({a, b});
    }
    return out;
}

}  // namespace

TEST(GenH, SmallIndices) {
    const auto seq = gen_H({0, 1}, 4);
    ASSERT_EQ(seq.size(), 5u);
    EXPECT_EQ(seq[0], rp({1}));
    EXPECT_EQ(seq[1], rp({-1}));
    EXPECT_EQ(seq[2], rp({1, 1}));
    EXPECT_EQ(seq[4], rp({1, 5, 1}));
}

TEST(GenH, InitialConditionForAnyParams) {
    for (const auto& p : rational_grid()) EXPECT_EQ(gen_H(p, 0)[0], rp({1}));
}

TEST(GenH, Guards) {
    EXPECT_THROW(gen_H({0, -1}, 4), InvalidParams);
    EXPECT_THROW(gen_H({0, 1}, -1), InvalidParams);
    EXPECT_THROW(gen_H({0, 1}, kDefaultMaxM + 1), InvalidParams);
    EXPECT_NO_THROW(gen_H({0, 1}, 600, 600));
}

TEST(GenP, Examples) {
    const GeneralParams g{1, 0, 0, 0, 1};
    const auto seq = gen_P(g, 1);
    EXPECT_EQ(seq[0], rp({1}));
    EXPECT_EQ(seq[1], rp({-1}));
    EXPECT_EQ(gen_P({1, 0, -2, 0, 1}, 2)[2], rp({1, 2}));
}

TEST(GenP, RejectsUncoveredSigns) {
    EXPECT_THROW(gen_P({0, 0, 0, 0, 1}, 3), InvalidParams);
    EXPECT_THROW(gen_P({1, 0, 0, 0, 0}, 3), InvalidParams);
    EXPECT_THROW(gen_P({1, 0, 2, 0, 1}, 3), InvalidParams);
}

TEST(SeriesOracle, MatchesHandExpansion) {
    const auto s = series_oracle({0, 1}, 4);
    EXPECT_EQ(s[0], rp({1}));
    EXPECT_EQ(s[1], rp({-1}));
    EXPECT_EQ(s[4], rp({1, 5, 1}));
}

TEST(RecurrenceProperty, GenHEqualsSeriesOracle) {
    for (const auto& p : rational_grid()) {
        const auto h = gen_H(p, 30);
        const auto s = series_oracle(p, 30);
        const auto c = oracle::series_by_convolution(p.a, p.b, 30);
        for (int m = 0; m <= 30; ++m) {
            EXPECT_EQ(h[static_cast<std::size_t>(m)], s[static_cast<std::size_t>(m)]) << "m=" << m;
            EXPECT_EQ(h[static_cast<std::size_t>(m)], from_map(c[static_cast<std::size_t>(m)])) << "m=" << m;
        }
    }
}

TEST(RecurrenceProperty, DegreeBound) {
    for (const auto& p : rational_grid()) {
        const auto h = gen_H(p, 120);
        for (int m = 0; m <= 120; ++m) EXPECT_LE(h[static_cast<std::size_t>(m)].degree(), m / 2);
    }
}

TEST(RecurrenceProperty, ConstantTermsSolveThreeTermRecursion) {
    for (const auto& p : rational_grid()) {
        const auto h = gen_H(p, 40);
        // 1/(1 + t + a t^2): u_m = -u_{m-1} - a u_{m-2}
        Rational u2 = 0, u1 = 1;
        EXPECT_EQ(h[0](Rational(0)), u1);
        for (int m = 1; m <= 40; ++m) {
            Rational u = -u1 - p.a * u2;
            EXPECT_EQ(h[static_cast<std::size_t>(m)](Rational(0)), u);
            u2 = u1;
            u1 = u;
        }
    }
}

TEST(RecurrenceProperty, GeneralReducesToNormalized) {
    const std::vector<GeneralParams> cases{
        {1, 0, -2, 0, 1}, {2, 3, -1, 5, 4}, {-1, 2, 3, 1, 2}, {Rational(1, 2), -1, 1, 3, -2}, {3, 0, 0, -1, 1},
    };
    for (const auto& g : cases) {
        const NormParams p = normalize(g);
        const auto P = gen_P(g, 25);
        const auto H = gen_H(p, 25);
        const Rational c3 = g.c * g.c * g.c;
        Rational cm = 1;
        for (int m = 0; m <= 25; ++m) {
            const RationalPoly rhs = compose_affine(H[static_cast<std::size_t>(m)], Rational(g.a1 / c3), Rational(g.a0 / c3)) * cm;
            EXPECT_EQ(P[static_cast<std::size_t>(m)], rhs) << "m=" << m;
            cm *= g.c;
        }
    }
}
