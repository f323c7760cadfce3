// Seeded random generators for property tests.
#pragma once

#include <cstdint>
#include <random>

#include "spin6/spin6.hpp"

namespace spin6::testkit {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2026ULL;

class Gen {
  public:
    explicit Gen(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    CubicForm cubic(std::size_t n, std::int64_t lo, std::int64_t hi) {
        CubicForm F(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = j; k < n; ++k) F.set(i, j, k, uniform(lo, hi));
        return F;
    }

    IntVector vector(std::size_t n, std::int64_t lo, std::int64_t hi) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = uniform(lo, hi);
        return v;
    }

    IntVector even_vector(std::size_t n, std::int64_t half) { return 2 * vector(n, -half, half); }

    /// Spin tuple with arbitrary coefficients in [lo, hi]: usually not admissible.
    WallTuple spin_tuple(std::size_t n, std::int64_t lo, std::int64_t hi) {
        return WallTuple(0, cubic(n, lo, hi), LinearForm(vector(n, lo, hi).values()), true);
    }

    /// Admissible spin tuple: p1_i = 4 F_iii + 24 k_i and the parity of F_ijj fixed.
    WallTuple admissible_tuple(std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t b3 = 0) {
        CubicForm F = cubic(n, lo, hi);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!is_even(F.at(i, i, j) + F.at(i, j, j))) F.set(i, j, j, F.at(i, j, j) + (F.at(i, j, j) < hi ? 1 : -1));
        LinearForm p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = 4 * F.at(i, i, i) + 24 * uniform(-3, 3);
        return WallTuple(b3, std::move(F), std::move(p), true);
    }

    /// Product of random elementary matrices and sign flips.
    UnimodularMap unimodular(std::size_t n, int steps = 6) {
        IntMatrix M = IntMatrix::identity(n);
        if (n == 0) return UnimodularMap(M);
        for (int s = 0; s < steps; ++s) {
            const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
            const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
            if (i == j) {
                if (coin())
                    for (std::size_t r = 0; r < n; ++r) M(r, i) = -M(r, i);
                continue;
            }
            const std::int64_t c = uniform(-2, 2);
            for (std::size_t r = 0; r < n; ++r) M(r, j) += c * M(r, i);
        }
        return UnimodularMap(M);
    }

    /// Package with an admissible tuple and an even c1.
    ThreefoldPackage package(std::size_t n) {
        const WallTuple t = admissible_tuple(n, -6, 6);
        return ThreefoldPackage("random", t, BettiData::simply_connected(static_cast<std::int64_t>(n) + uniform(0, 3), 0), even_vector(n, 3));
    }

    /// Surface data on a random symmetric working lattice satisfying Noether's congruence.
    SurfaceData surface(std::size_t m) {
        IntMatrix Q(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) Q(i, j) = Q(j, i) = uniform(-3, 3);
        IntVector c1 = vector(m, -4, 4);
        Integer c1sq = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) c1sq += c1[i] * Q(i, j) * c1[j];
        Integer e = 12 * uniform(-2, 4) - c1sq;
        return SurfaceData("random", std::move(Q), std::move(c1), e, static_cast<std::int64_t>(m) + uniform(0, 8));
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace spin6::testkit
