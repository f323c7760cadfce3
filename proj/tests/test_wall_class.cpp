#include <gtest/gtest.h>

#include "spin6/wall_class.hpp"
#include "support/generators.hpp"

using namespace spin6;
using spin6::testkit::Gen;

namespace {

WallTuple p3() { return WallTuple(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{4}); }
WallTuple bl_pt_p3() { return WallTuple(0, CubicForm(2, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}), LinearForm{4, 4}); }

}  // namespace

TEST(WallTuple, ValidatesInputs) {
    EXPECT_THROW(WallTuple(3, CubicForm(1), LinearForm{0}), InvalidArgument);
    EXPECT_THROW(WallTuple(-2, CubicForm(1), LinearForm{0}), InvalidArgument);
    EXPECT_THROW(WallTuple(0, CubicForm(2), LinearForm{0}), InvalidArgument);
    EXPECT_NO_THROW(p3());
}

TEST(Betti, EulerAndValidation) {
    EXPECT_EQ(BettiData::simply_connected(1, 0).euler(), 4);
    EXPECT_EQ(BettiData::simply_connected(1, 204).euler(), -200);
    EXPECT_THROW(BettiData::simply_connected(1, 3), InvalidArgument);
    BettiData b = BettiData::simply_connected(2, 0);
    b.b[4] = 3;
    EXPECT_THROW(b.validate(), InvalidArgument);
}

TEST(Admissibility, KnownExamples) {
    EXPECT_TRUE(is_admissible(p3()));
    EXPECT_TRUE(is_admissible(bl_pt_p3()));
    EXPECT_FALSE(is_admissible(WallTuple(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{5})));
    // F_001 + F_011 odd breaks admissibility even when the diagonal congruences hold
    EXPECT_FALSE(is_admissible(WallTuple(0, CubicForm(2, {{{0, 0, 1}, 1}}), LinearForm{0, 0})));
    EXPECT_THROW(is_admissible(WallTuple(0, CubicForm(1, {{{0, 0, 0}, 2}}), LinearForm{2}, false)), NonSpinTuple);
}

TEST(Admissibility, CongruenceTestMatchesBruteForce) {
    Gen g(41);
    int admissible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        const WallTuple t = g.coin() ? g.admissible_tuple(n, -50, 50) : g.spin_tuple(n, -50, 50);
        const bool fast = is_admissible(t);
        EXPECT_EQ(fast, is_admissible_bruteforce(t));
        admissible += fast;
    }
    EXPECT_GT(admissible, 100);
    EXPECT_THROW(is_admissible_bruteforce(WallTuple(0, CubicForm(4), LinearForm(4))), InvalidArgument);
}

TEST(Admissibility, InvariantUnderBasisChangeAndOrientation) {
    Gen g(42);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
        const WallTuple t = g.coin() ? g.admissible_tuple(n, -20, 20) : g.spin_tuple(n, -20, 20);
        EXPECT_EQ(is_admissible(t), is_admissible(change_basis(t, g.unimodular(n))));
        EXPECT_EQ(is_admissible(t), is_admissible(reverse_orientation(t)));
    }
}

TEST(Homotopy, P1CongruenceModulo48) {
    const WallTuple a = bl_pt_p3();
    const WallTuple b(0, a.form(), LinearForm{4 + 48 * 7, 4 - 48});
    const WallTuple c(0, a.form(), LinearForm{4 + 24, 4});
    EXPECT_TRUE(homotopy_equivalent_identified(a, b));
    EXPECT_FALSE(homotopy_equivalent_identified(a, c));
    EXPECT_FALSE(homotopy_equivalent_identified(a, WallTuple(0, -a.form(), a.p1())));
    EXPECT_THROW(homotopy_equivalent_identified(a, WallTuple(2, a.form(), a.p1())), InvalidArgument);
}

TEST(Isomorphism, RecoversRandomBasisChanges) {
    Gen g(43);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        const WallTuple t = g.admissible_tuple(n, -4, 4);
        const UnimodularMap M = g.unimodular(n, 3);
        const WallTuple s = change_basis(t, M);
        // entries of M stay small with three elementary steps
        std::int64_t bound = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) bound = std::max<std::int64_t>(bound, static_cast<std::int64_t>(abs_value(M.matrix()(i, j))));
        const auto found = isomorphic(s, t, bound);
        ASSERT_TRUE(found.has_value());
        EXPECT_EQ(change_basis(t, *found), s);
    }
}

TEST(Isomorphism, DistinguishesDifferentP1) {
    const WallTuple a = bl_pt_p3();
    const WallTuple b(0, a.form(), LinearForm{4, 28});
    EXPECT_FALSE(isomorphic(a, b, 3).has_value());
    EXPECT_THROW(isomorphic(a, p3(), 2), InvalidArgument);
}

TEST(Isomorphism, OrientationReversal) {
    const WallTuple a = bl_pt_p3();
    const auto m = isomorphic_reversing_orientation(a, reverse_orientation(a), 1);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(change_basis(reverse_orientation(reverse_orientation(a)), *m), a);
}
