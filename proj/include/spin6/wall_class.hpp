// Wall invariants of simply connected spin 6-manifolds with torsion-free cohomology:
// (b3, H^2, cubic cup form F, linear form p1).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spin6/lattice_forms.hpp"

namespace spin6 {

class NonSpinTuple : public InvalidArgument {
  public:
    NonSpinTuple() : InvalidArgument("non-spin tuple") {}
};

class WallTuple {
  public:
    WallTuple(std::int64_t b3, CubicForm form, LinearForm p1, bool spin = true)
        : b3_(b3), form_(std::move(form)), p1_(std::move(p1)), spin_(spin) {
        if (b3_ < 0 || b3_ % 2 != 0) throw InvalidArgument("b3 must be even and non-negative, got " + std::to_string(b3_));
        require_rank(form_.rank(), p1_.size(), "p1");
    }

    std::int64_t b3() const noexcept { return b3_; }
    std::size_t rank() const noexcept { return form_.rank(); }
    const CubicForm& form() const noexcept { return form_; }
    const LinearForm& p1() const noexcept { return p1_; }
    bool spin() const noexcept { return spin_; }

    Integer cube(const IntVector& w) const { return eval_cubic_diag(form_, w); }
    Integer p1_of(const IntVector& w) const { return eval_linear(p1_, w); }

    friend bool operator==(const WallTuple&, const WallTuple&) = default;

  private:
    std::int64_t b3_;
    CubicForm form_;
    LinearForm p1_;
    bool spin_;
};

/// Betti numbers of a closed simply connected 6-manifold.
struct BettiData {
    std::array<std::int64_t, 7> b{1, 0, 0, 0, 0, 0, 1};

    static BettiData simply_connected(std::int64_t b2, std::int64_t b3) {
        BettiData d;
        d.b = {1, 0, b2, b3, b2, 0, 1};
        d.validate();
        return d;
    }

    std::int64_t b2() const noexcept { return b[2]; }
    std::int64_t b3() const noexcept { return b[3]; }
    std::int64_t euler() const noexcept { return b[0] - b[1] + b[2] - b[3] + b[4] - b[5] + b[6]; }

    void validate() const {
        for (auto v : b)
            if (v < 0) throw InvalidArgument("Betti numbers must be non-negative");
        if (b[0] != 1 || b[6] != 1) throw InvalidArgument("b0 and b6 must equal 1");
        if (b[1] != 0 || b[5] != 0) throw InvalidArgument("b1 and b5 must vanish for a simply connected manifold");
        if (b[2] != b[4]) throw InvalidArgument("Poincare duality requires b2 = b4");
        if (b[3] % 2 != 0) throw InvalidArgument("b3 must be even");
    }

    friend bool operator==(const BettiData&, const BettiData&) = default;
};

inline WallTuple change_basis(const WallTuple& t, const UnimodularMap& M) {
    auto [F, p] = change_basis(t.form(), t.p1(), M);
    return WallTuple(t.b3(), std::move(F), std::move(p), t.spin());
}

/// The same manifold with reversed orientation: F and p1 change sign.
inline WallTuple reverse_orientation(const WallTuple& t) { return WallTuple(t.b3(), -t.form(), -t.p1(), t.spin()); }

/// 4 F(W) == p1(W) mod 24 for every W, checked as
///   4 F(e_i,e_i,e_i) == p1(e_i) mod 24         for every i,
///   F(e_i,e_i,e_j) + F(e_i,e_j,e_j) == 0 mod 2  for every i < j.
/// Expanding 4(sum a_i e_i)^3 - p1(sum a_i e_i) with a^3 == a mod 6 and a^2 == a mod 2
/// shows these are equivalent.
inline bool is_admissible(const WallTuple& t) {
    if (!t.spin()) throw NonSpinTuple();
    const auto& F = t.form();
    for (std::size_t i = 0; i < t.rank(); ++i)
        if (floor_mod(4 * F.at(i, i, i) - t.p1()[i], 24) != 0) return false;
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = i + 1; j < t.rank(); ++j)
            if (!is_even(F.at(i, i, j) + F.at(i, j, j))) return false;
    return true;
}

/// Literal check of 4 F(W) == p1(W) mod 24 over all W in {0..23}^n. Rank <= 3.
inline bool is_admissible_bruteforce(const WallTuple& t) {
    if (!t.spin()) throw NonSpinTuple();
    const std::size_t n = t.rank();
    if (n > 3) throw InvalidArgument("brute-force admissibility is limited to rank <= 3");
    IntVector w(n);
    std::vector<int> digits(n, 0);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) w[i] = digits[i];
        if (floor_mod(4 * t.cube(w) - t.p1_of(w), 24) != 0) return false;
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == 24) digits[pos++] = 0;
        if (pos == n) return true;
    }
}

/// Same b3 (= 0), same cubic form and p1 congruent mod 48, both in one fixed basis.
/// For b3 = 0 and torsion-free cohomology this identifies the homotopy type.
inline bool homotopy_equivalent_identified(const WallTuple& a, const WallTuple& b) {
    if (!a.spin() || !b.spin()) throw NonSpinTuple();
    if (a.b3() != 0 || b.b3() != 0) throw InvalidArgument("homotopy identification needs b3 = 0");
    if (a.rank() != b.rank()) throw InvalidArgument("homotopy identification needs equal ranks");
    if (a.form() != b.form()) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (floor_mod(a.p1()[i] - b.p1()[i], 48) != 0) return false;
    return true;
}

namespace detail {

inline std::vector<IntVector> box_vectors_matching(const WallTuple& t, const Integer& cube, const Integer& p1, std::int64_t bound) {
    const std::size_t n = t.rank();
    std::vector<IntVector> out;
    std::vector<std::int64_t> digits(n, -bound);
    IntVector v(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) v[i] = digits[i];
        if (t.p1_of(v) == p1 && t.cube(v) == cube) out.push_back(v);
        std::size_t pos = n;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (digits[pos] < bound) {
                ++digits[pos];
                done = false;
                break;
            }
            digits[pos] = -bound;
        }
        if (done) return out;
    }
}

}  // namespace detail

/// Searches for a unimodular M with entries in [-bound, bound] and
/// change_basis(target, M) == source. Backtracks over images of basis vectors,
/// pruned by cube values, p1 values and all trilinear values against earlier columns.
/// Returns the lexicographically smallest matrix (column-major), or nothing when no
/// map exists inside the bound; this is not a proof of non-isomorphism.
inline std::optional<UnimodularMap> isomorphic(const WallTuple& source, const WallTuple& target, std::int64_t bound) {
    if (source.rank() != target.rank()) throw InvalidArgument("isomorphism search needs equal ranks");
    if (source.b3() != target.b3()) throw InvalidArgument("isomorphism search needs equal b3");
    if (bound < 1) throw InvalidArgument("isomorphism bound must be positive");
    const std::size_t n = source.rank();
    if (n == 0) return UnimodularMap::identity(0);

    std::vector<std::vector<IntVector>> candidates(n);
    for (std::size_t i = 0; i < n; ++i)
        candidates[i] = detail::box_vectors_matching(target, source.form().at(i, i, i), source.p1()[i], bound);

    std::vector<IntVector> cols(n);
    std::vector<std::size_t> choice(n, 0);
    std::size_t depth = 0;
    while (true) {
        if (choice[depth] == candidates[depth].size()) {
            if (depth == 0) return std::nullopt;
            choice[depth] = 0;
            ++choice[--depth];
            continue;
        }
        cols[depth] = candidates[depth][choice[depth]];
        bool ok = true;
        for (std::size_t a = 0; a <= depth && ok; ++a)
            for (std::size_t b = a; b <= depth && ok; ++b) {
                if (a == depth && b == depth) continue;  // diagonal already matched
                if (eval_cubic(target.form(), cols[a], cols[b], cols[depth]) != source.form().at(a, b, depth)) ok = false;
            }
        if (ok && depth + 1 == n) {
            auto M = IntMatrix::from_columns(cols);
            Integer d = determinant(M);
            if (d == 1 || d == -1) return UnimodularMap(std::move(M));
            ok = false;
        }
        if (ok)
            ++depth;
        else
            ++choice[depth];
    }
}

/// Orientation-reversing identification: a form-preserving map onto the reversed target.
inline std::optional<UnimodularMap> isomorphic_reversing_orientation(const WallTuple& source, const WallTuple& target,
                                                                     std::int64_t bound) {
    return isomorphic(source, reverse_orientation(target), bound);
}

}  // namespace spin6
