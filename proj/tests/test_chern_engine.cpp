#include <gtest/gtest.h>

#include "spin6/chern_engine.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace spin6;
using spin6::testkit::Gen;

namespace {

WallTuple p3() { return WallTuple(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{4}); }

}  // namespace

TEST(ACStructures, EvennessAndEnumerationSize) {
    EXPECT_THROW(ACStructure(IntVector{1, 2}), InvalidArgument);
    Gen g(51);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::int64_t box = 0; box <= 2; ++box) {
            const auto all = enumerate_ac_structures(g.admissible_tuple(n, -3, 3), box);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < n; ++i) expected *= static_cast<std::size_t>(2 * box + 1);
            EXPECT_EQ(all.size(), expected);
            for (const auto& a : all) EXPECT_TRUE(a.c1().all_even());
            for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].c1(), all[i].c1());
        }
}

TEST(ChernNumbers, ProjectiveSpaceMatchesTotalChernClass) {
    const auto ref = oracle::projective_space_data();
    const auto c = chern_numbers(p3(), BettiData::simply_connected(1, 0), IntVector{4});
    EXPECT_EQ(c.c1_cubed, ref.c1_cubed);
    EXPECT_EQ(c.c1c2, ref.c1c2);
    EXPECT_EQ(c.c3, 4);
    EXPECT_EQ(c.chi_O_integer(), Integer(1));
    EXPECT_EQ(ref.p1_h, 4);
}

TEST(ChernNumbers, RejectsBadInputs) {
    const auto b = BettiData::simply_connected(1, 0);
    EXPECT_THROW(chern_numbers(p3(), b, IntVector{3}), InvalidArgument);
    EXPECT_THROW(chern_numbers(p3(), BettiData::simply_connected(1, 2), IntVector{4}), InvalidArgument);
    // non-spin tuple with c1 making F(c1) - p1(c1) odd
    const WallTuple odd(0, CubicForm(1, {{{0, 0, 0}, 2}}), LinearForm{1}, false);
    EXPECT_THROW(chern_numbers(odd, b, IntVector{1}), ImpossibleChernData);
}

TEST(ChernNumbers, RelationRoundTripsForEvenC1) {
    Gen g(52);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
        const WallTuple t = g.admissible_tuple(n, -10, 10);
        const IntVector c1 = g.even_vector(n, 5);
        const auto c = chern_numbers(t, BettiData::simply_connected(static_cast<std::int64_t>(n), 0), c1);
        EXPECT_EQ(t.p1_of(c1), c.c1_cubed - 2 * c.c1c2);
        EXPECT_EQ(c.c1_cubed, oracle::tensor_cube(t.form(), c1));
    }
}

TEST(ChernNumbers, EquivariantUnderBasisChange) {
    Gen g(53);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
        const WallTuple t = g.admissible_tuple(n, -10, 10);
        const UnimodularMap M = g.unimodular(n);
        const IntVector c1 = g.even_vector(n, 4);
        const auto b = BettiData::simply_connected(static_cast<std::int64_t>(n) + 1, 0);
        // c1 expressed in the new basis: M c1' = c1
        const IntVector c1_new = M.inverse().apply(c1);
        EXPECT_EQ(chern_numbers(t, b, c1), chern_numbers(change_basis(t, M), b, c1_new));
    }
}

TEST(Envelope, HandValues) {
    auto lower = [](std::int64_t b2, std::int64_t chi) { return cor_ineq_bounds(BettiData::simply_connected(b2, 0), chi).lower; };
    EXPECT_EQ(lower(2, 1), -8);
    EXPECT_EQ(lower(1, -1), -64);
    EXPECT_EQ(lower(10, 1), -72);
    EXPECT_EQ(cor_ineq_bounds(BettiData::simply_connected(3, 0), 5).upper, 0);
}

TEST(Obstructions, ProjectiveSpaceIsConsistent) {
    const auto r = kaehler_obstructions(p3(), BettiData::simply_connected(1, 0), IntVector{4}, {});
    EXPECT_EQ(r.rr_integrality.verdict, Verdict::pass);
    EXPECT_EQ(r.rr_hodge_range.verdict, Verdict::pass);
    EXPECT_TRUE(r.general_type_impossible);
    EXPECT_EQ(r.general_type_spin.verdict, Verdict::pass);
    EXPECT_EQ(r.miyaoka_yau.verdict, Verdict::not_applicable);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.h20_bound, 1);
}

TEST(Obstructions, HypothesisDrivenFailures) {
    const auto b = BettiData::simply_connected(1, 0);
    const auto gt = kaehler_obstructions(p3(), b, IntVector{4}, {.minimal_general_type = true});
    EXPECT_EQ(gt.miyaoka_yau.verdict, Verdict::fail);
    EXPECT_EQ(gt.general_type_spin.verdict, Verdict::fail);
    EXPECT_FALSE(gt.consistent());
    const auto kod = kaehler_obstructions(p3(), b, IntVector{4}, {.kodaira_0_1_2 = true});
    EXPECT_EQ(kod.kodaira_vanishing.verdict, Verdict::fail);
    const auto nu = kaehler_obstructions(p3(), b, IntVector{4}, {.non_uniruled = true});
    EXPECT_EQ(nu.non_uniruled_envelope.verdict, Verdict::fail);  // 64 > 0
    ASSERT_TRUE(nu.envelope.has_value());
}

TEST(Obstructions, RiemannRochIntegrality) {
    // F = 1, p1 = 4 + 24 k, c1 = 2: c1c2 = (8 - 2(4 + 24k)) / 2 = -24 k, always integral;
    // c1 = 2 with p1 = 28 gives c1c2 = -24: integral but outside the b3 = 0 range.
    const WallTuple t(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{28});
    const auto r = kaehler_obstructions(t, BettiData::simply_connected(1, 0), IntVector{2}, {});
    EXPECT_EQ(r.rr_integrality.verdict, Verdict::pass);
    EXPECT_EQ(r.rr_hodge_range.verdict, Verdict::fail);
    // non-admissible tuple: c1c2 not divisible by 24
    const WallTuple bad(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{6});
    EXPECT_EQ(kaehler_obstructions(bad, BettiData::simply_connected(1, 0), IntVector{2}, {}).rr_integrality.verdict, Verdict::fail);
}

TEST(Obstructions, GeneralTypeImpossibleOnEverySpinB3ZeroTuple) {
    Gen g(54);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
        const WallTuple t = g.admissible_tuple(n, -10, 10);
        const auto r = kaehler_obstructions(t, BettiData::simply_connected(static_cast<std::int64_t>(n), 0), g.even_vector(n, 3), {});
        EXPECT_TRUE(r.general_type_impossible);
    }
    const WallTuple with_b3 = g.admissible_tuple(1, -3, 3, 4);
    EXPECT_FALSE(kaehler_obstructions(with_b3, BettiData::simply_connected(1, 4), IntVector{2}, {}).general_type_impossible);
}

TEST(RankOne, SpecExamples) {
    const WallTuple big(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{1'000'000});
    EXPECT_TRUE(b2_one_certify(big, 1000).certified());
    const WallTuple neg(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{-1'000'000});
    const auto v = b2_one_certify(neg, 1000);
    EXPECT_FALSE(v.certified());
    EXPECT_EQ(v.calabi_yau, RankOneCase::open);
}

TEST(RankOne, NeverCertifiesProjectiveSpace) {
    for (std::int64_t threshold = 0; threshold <= 100; ++threshold) {
        EXPECT_FALSE(b2_one_certify(p3(), threshold).certified());
        EXPECT_FALSE(b2_one_certify(reverse_orientation(p3()), threshold).certified());
    }
    EXPECT_EQ(b2_one_certify(p3(), 0).fano_index, 4);
}

TEST(RankOne, NormalizesGeneratorAndRejectsZeroForm) {
    const WallTuple flipped(0, CubicForm(1, {{{0, 0, 0}, -1}}), LinearForm{-4});
    const auto v = b2_one_certify(flipped, kFanoRankOneP1Bound);
    EXPECT_EQ(v.cube_L, 1);
    EXPECT_EQ(v.p1_L, 4);
    EXPECT_THROW(b2_one_certify(WallTuple(0, CubicForm(1), LinearForm{4}), 46), InvalidArgument);
    EXPECT_THROW(b2_one_certify(WallTuple(0, CubicForm(2), LinearForm{4, 4}), 46), InvalidArgument);
}

TEST(RankOne, FanoBoundCoversEveryIndex) {
    // For F(L) >= 1 and index i in 1..4 with 2 <= i^3 F(L) <= 64: p1(L) = (i^3 F(L) - 48) / i lies in [-46, 16].
    for (int i = 1; i <= 4; ++i)
        for (int f = 1; i * i * i * f <= 64; ++f) {
            const int c13 = i * i * i * f;
            if (c13 < 2 || (c13 - 48) % i != 0) continue;
            const int p = (c13 - 48) / i;
            EXPECT_LE(std::abs(p), kFanoRankOneP1Bound);
        }
}
