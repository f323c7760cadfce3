#include <gtest/gtest.h>

#include <set>

#include "spin6/integer.hpp"
#include "support/generators.hpp"

using namespace spin6;

TEST(IntegerHelpers, FloorModIsNonNegative) {
    EXPECT_EQ(floor_mod(-7, 24), 17);
    EXPECT_EQ(floor_mod(48, 24), 0);
    EXPECT_EQ(floor_mod(Integer(-1) << 100, 3), floor_mod(Integer(2), 3));  // 2^100 = 1 mod 3
    EXPECT_THROW(floor_mod(5, 0), InvalidArgument);
}

TEST(IntegerHelpers, FloorDivRoundsDown) {
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, -2), -4);
    EXPECT_EQ(floor_div(6, 3), 2);
}

TEST(IntegerHelpers, GcdAndContent) {
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_EQ(gcd(-12, 18), 6);
    std::vector<Integer> v{2548, 4900};
    EXPECT_EQ(content(v), 196);
    std::vector<Integer> z{0, 0};
    EXPECT_EQ(content(z), 0);
}

TEST(IntegerHelpers, ExtendedGcdBezoutIdentity) {
    testkit::Gen g(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Integer a = g.uniform(-10'000, 10'000), b = g.uniform(-10'000, 10'000);
        const auto e = extended_gcd(a, b);
        EXPECT_EQ(e.g, gcd(a, b));
        EXPECT_EQ(a * e.x + b * e.y, e.g);
    }
}

TEST(IntegerHelpers, IntegerSqrtFloor) {
    for (std::int64_t n = 0; n < 2000; ++n) {
        const Integer r = integer_sqrt_floor(n);
        EXPECT_LE(r * r, n);
        EXPECT_GT((r + 1) * (r + 1), n);
    }
    const Integer big = (Integer(1) << 200) + 12345;
    const Integer r = integer_sqrt_floor(big);
    EXPECT_TRUE(r * r <= big && (r + 1) * (r + 1) > big);
}

namespace {

std::vector<Integer> expand(const std::vector<std::pair<Integer, Integer>>& factors, const Integer& scale) {
    // prod (a t - b), times scale; coefficient i multiplies t^i
    std::vector<Integer> p{scale};
    for (const auto& [a, b] : factors) {
        std::vector<Integer> q(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] += -b * p[i];
            q[i + 1] += a * p[i];
        }
        p = std::move(q);
    }
    return p;
}

Integer eval(const std::vector<Integer>& p, const Integer& t) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

}  // namespace

TEST(IntegerRoots, MatchScanningOracle) {
    testkit::Gen g(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Integer> p(static_cast<std::size_t>(g.uniform(2, 4)));
        for (auto& c : p) c = g.uniform(-30, 30);
        if (p.back() == 0) p.back() = 1;
        // any integer root divides p(0) (or is 0), and |root| <= max|coeff| + 1
        std::set<Integer> expected;
        for (std::int64_t t = -100; t <= 100; ++t)
            if (eval(p, t) == 0) expected.insert(t);
        const auto got = integer_roots(p);
        EXPECT_EQ(std::set<Integer>(got.begin(), got.end()), expected);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
}

TEST(IntegerRoots, PlantedRootsIncludingLargeOnes) {
    testkit::Gen g(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<Integer, Integer>> f;
        std::set<Integer> planted;
        const int d = static_cast<int>(g.uniform(1, 3));
        for (int k = 0; k < d; ++k) {
            Integer r = g.uniform(-1'000'000, 1'000'000);
            if (g.coin()) r *= Integer(1) << 70;
            f.push_back({1, r});
            planted.insert(r);
        }
        const auto got = integer_roots(expand(f, g.uniform(1, 9)));
        EXPECT_EQ(std::set<Integer>(got.begin(), got.end()), planted);
    }
}

TEST(IntegerRoots, RejectsZeroAndHighDegree) {
    EXPECT_THROW(integer_roots({0, 0}), ZeroPolynomial);
    EXPECT_THROW(integer_roots({1, 0, 0, 0, 1}), InvalidArgument);
    EXPECT_TRUE(integer_roots({5}).empty());
    EXPECT_EQ(integer_roots({0, 0, 0, 2}), std::vector<Integer>{0});
}

TEST(RationalRoots, PlantedRationalRoots) {
    testkit::Gen g(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<Integer, Integer>> f;
        std::set<Rational> planted;
        const int d = static_cast<int>(g.uniform(1, 3));
        for (int k = 0; k < d; ++k) {
            const Integer a = g.uniform(1, 12), b = g.uniform(-40, 40);
            f.push_back({a, b});
            planted.insert(Rational(b, a));
        }
        const auto got = rational_roots(expand(f, g.uniform(1, 5) * (g.coin() ? 1 : -1)));
        EXPECT_EQ(std::set<Rational>(got.begin(), got.end()), planted);
    }
}

TEST(RationalRoots, IrreducibleHasNone) {
    EXPECT_TRUE(rational_roots({-2, 0, 0, 1}).empty());  // t^3 - 2
    EXPECT_TRUE(rational_roots({1, 0, 1}).empty());      // t^2 + 1
}
