// Symbolic constructions producing tuple, Betti and c1 data: point blow-up and
// blow-down, P^1-bundles P(L + O) over surfaces, Dolgachev surfaces, the canonical
// cube change under blowing up a rational curve, and a fixed gallery of examples.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spin6/chern_engine.hpp"

namespace spin6 {

/// Geometry that is known about a construction and cannot be read off the tuple.
struct KnownGeometry {
    bool kaehler = false;
    bool non_uniruled = false;
    friend bool operator==(const KnownGeometry&, const KnownGeometry&) = default;
};

/// Tuple, Betti numbers and (optionally) c1 of one threefold, plus how it was built.
class ThreefoldPackage {
  public:
    ThreefoldPackage(std::string name, WallTuple tuple, BettiData betti, std::optional<IntVector> c1, KnownGeometry known = {})
        : name_(std::move(name)), tuple_(std::move(tuple)), betti_(betti), c1_(std::move(c1)), known_(known) {
        betti_.validate();
        if (betti_.b3() != tuple_.b3()) throw InvalidArgument("package Betti data disagree with the tuple on b3");
        if (c1_) (void)chern_numbers(tuple_, betti_, *c1_);
        provenance_.push_back(name_);
    }

    const std::string& name() const noexcept { return name_; }
    const WallTuple& tuple() const noexcept { return tuple_; }
    const BettiData& betti() const noexcept { return betti_; }
    const std::optional<IntVector>& c1() const noexcept { return c1_; }
    const KnownGeometry& known() const noexcept { return known_; }
    const std::vector<std::string>& provenance() const noexcept { return provenance_; }

    ChernNumbers chern() const {
        if (!c1_) throw InvalidArgument("package " + name_ + " carries no c1");
        return chern_numbers(tuple_, betti_, *c1_);
    }

    ThreefoldPackage with_step(std::string step, std::string new_name) const {
        ThreefoldPackage p(*this);
        p.name_ = std::move(new_name);
        p.provenance_.push_back(std::move(step));
        return p;
    }

    /// Equality of the mathematical content; names and provenance are ignored.
    friend bool operator==(const ThreefoldPackage& a, const ThreefoldPackage& b) {
        return a.tuple_ == b.tuple_ && a.betti_ == b.betti_ && a.c1_ == b.c1_;
    }

  private:
    friend ThreefoldPackage blow_up_point(const ThreefoldPackage&);
    friend ThreefoldPackage blow_down(const ThreefoldPackage&, const IntVector&);

    std::string name_;
    WallTuple tuple_;
    BettiData betti_;
    std::optional<IntVector> c1_;
    KnownGeometry known_;
    std::vector<std::string> provenance_;
};

// ---------------------------------------------------------------------------
// Point blow-up: new class E with E^3 = 1, E orthogonal to the old classes,
// p1(E) = 4 and c1 -> (c1, -2). Hence c1^3 drops by 8 and c1c2 is unchanged.

inline ThreefoldPackage blow_up_point(const ThreefoldPackage& pkg) {
    const auto& t = pkg.tuple();
    const std::size_t n = t.rank();
    CubicForm F(n + 1);
    for (const auto& [key, v] : t.form().entries()) F.set(key[0], key[1], key[2], v);
    F.set(n, n, n, 1);
    WallTuple up(t.b3(), std::move(F), t.p1().appended(4), t.spin());
    BettiData b = pkg.betti();
    b.b[2] += 1;
    b.b[4] += 1;
    std::optional<IntVector> c1;
    if (pkg.c1()) c1 = pkg.c1()->appended(-2);
    ThreefoldPackage out("Bl_pt(" + pkg.name() + ")", std::move(up), b, std::move(c1), pkg.known());
    out.provenance_ = pkg.provenance_;
    out.provenance_.push_back("blow_up_point");
    return out;
}

/// psi(x) = F(e, e, x): the coefficient along e in a blow-up splitting.
inline LinearForm exceptional_coordinate(const WallTuple& t, const IntVector& e) { return contract2(t.form(), e, e); }

/// e^3 = 1, p1(e) = 4, and F(e, x, y) = psi(x) psi(y) with psi = F(e, e, .).
/// The last condition says cup product with e has corank-1 kernel K = ker(psi)
/// with Z^n = K + Z e, and F(e, e, K) = 0: the lattice splits as a blow-up.
inline bool is_blow_down_class(const WallTuple& t, const IntVector& e) {
    require_rank(t.rank(), e.size(), "exceptional class");
    if (!e.is_primitive()) return false;
    if (t.cube(e) != 1 || t.p1_of(e) != 4) return false;
    const std::size_t n = t.rank();
    const LinearForm psi = exceptional_coordinate(t, e);
    for (std::size_t i = 0; i < n; ++i) {
        const IntVector ei = IntVector::unit(n, i);
        for (std::size_t j = i; j < n; ++j)
            if (eval_cubic(t.form(), e, ei, IntVector::unit(n, j)) != psi[i] * psi[j]) return false;
    }
    return true;
}

inline constexpr std::int64_t kDefaultBlowDownBox = 10;

/// Every e with |coordinates| <= box satisfying is_blow_down_class, lexicographic.
inline std::vector<IntVector> blow_down_candidates(const WallTuple& t, std::int64_t box = kDefaultBlowDownBox) {
    if (t.rank() < 2) throw InvalidArgument("blow_down_candidates needs rank >= 2");
    if (box < 1) throw InvalidArgument("search box must be positive");
    return [&] {
        std::vector<IntVector> out;
        for (const auto& v : detail::box_vectors_matching(t, 1, 4, box))
            if (is_blow_down_class(t, v)) out.push_back(v);
        return out;
    }();
}

/// Inverse of blow_up_point in the splitting Z^n = ker(psi) + Z e.
inline ThreefoldPackage blow_down(const ThreefoldPackage& pkg, const IntVector& e) {
    const auto& t = pkg.tuple();
    if (t.rank() < 2) throw InvalidArgument("cannot blow down a rank-1 lattice");
    if (!is_blow_down_class(t, e)) throw InvalidArgument("class " + e.str() + " is not an exceptional class of a point blow-up");
    const LinearForm psi = exceptional_coordinate(t, e);
    if (pkg.c1() && eval_linear(psi, *pkg.c1()) != -2)
        throw InvalidArgument("c1 has coefficient " + eval_linear(psi, *pkg.c1()).str() + " along " + e.str() + ", expected -2");

    const KernelBasis kb = kernel_basis(psi);
    const IntMatrix K = IntMatrix::from_columns(kb.basis);
    WallTuple down(t.b3(), pullback(t.form(), K), pullback(t.p1(), K), t.spin());
    BettiData b = pkg.betti();
    b.b[2] -= 1;
    b.b[4] -= 1;
    std::optional<IntVector> c1;
    if (pkg.c1()) c1 = kb.coordinates(*pkg.c1() + 2 * e);
    ThreefoldPackage out("Bl_down(" + pkg.name() + ")", std::move(down), b, std::move(c1), pkg.known());
    out.provenance_ = pkg.provenance_;
    out.provenance_.push_back("blow_down" + e.str());
    return out;
}

// ---------------------------------------------------------------------------

/// Invariants of a compact Kaehler surface on a working sublattice of H^2.
class SurfaceData {
  public:
    SurfaceData(std::string name, IntMatrix pairing, IntVector c1, Integer euler, std::int64_t b2)
        : name_(std::move(name)), pairing_(std::move(pairing)), c1_(std::move(c1)), euler_(std::move(euler)), b2_(b2) {
        const std::size_t n = pairing_.rows();
        if (pairing_.cols() != n) throw InvalidArgument("surface pairing must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (pairing_(i, j) != pairing_(j, i)) throw InvalidArgument("surface pairing must be symmetric");
        require_rank(n, c1_.size(), "surface c1");
        if (b2_ < static_cast<std::int64_t>(n)) throw InvalidArgument("surface b2 smaller than working rank");
        if (floor_mod(pair(c1_, c1_) + euler_, 12) != 0) throw InvalidArgument("Noether: c1^2 + e must be divisible by 12");
    }

    const std::string& name() const noexcept { return name_; }
    std::size_t rank() const noexcept { return pairing_.rows(); }
    const IntMatrix& pairing() const noexcept { return pairing_; }
    const IntVector& c1() const noexcept { return c1_; }
    const Integer& euler() const noexcept { return euler_; }
    std::int64_t b2() const noexcept { return b2_; }
    Integer chi_O() const { return (pair(c1_, c1_) + euler_) / 12; }

    Integer pair(const IntVector& a, const IntVector& b) const {
        require_rank(rank(), a.size(), "surface class");
        require_rank(rank(), b.size(), "surface class");
        Integer acc = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) acc += a[i] * pairing_(i, j) * b[j];
        return acc;
    }

  private:
    std::string name_;
    IntMatrix pairing_;
    IntVector c1_;
    Integer euler_;
    std::int64_t b2_;
};

inline SurfaceData projective_plane() { return SurfaceData("P2", IntMatrix{{1}}, IntVector{3}, 3, 1); }

/// Dolgachev surface S_q on the working sublattice spanned by (f', h) with f'^2 = 0, f'.h = 1 and
/// h^2 = -1, c1 = -(q - 2) f', e = 12, b2 = 10, chi(O) = 1. The canonical class is characteristic
/// and congruent to f' mod 2, so any h with f'.h = 1 has odd square.
inline SurfaceData dolgachev_surface(std::int64_t q) {
    if (q < 3 || q % 2 == 0) throw InvalidArgument("Dolgachev surface needs odd q >= 3, got " + std::to_string(q));
    return SurfaceData("S_" + std::to_string(q), IntMatrix{{0, 1}, {1, -1}}, IntVector{-(q - 2), 0}, 12, 10);
}

/// K3 surface on a hyperbolic-plane working sublattice: c1 = 0, e = 24, b2 = 22.
inline SurfaceData k3_surface() { return SurfaceData("K3", IntMatrix{{0, 1}, {1, 0}}, IntVector{0, 0}, 24, 22); }

/// c2 of X = P(L + O) as a linear form on H^2(X) in the basis (pullbacks, y):
///   c2 = c2(S) + c1(S)(2y + omega), so c2.f*b = 2 c1(S).b and c2.y = e(S) - c1(S).omega.
inline LinearForm p1_bundle_c2(const SurfaceData& S, const IntVector& omega) {
    require_rank(S.rank(), omega.size(), "omega");
    const std::size_t m = S.rank();
    LinearForm c2(m + 1);
    for (std::size_t i = 0; i < m; ++i) c2[i] = 2 * S.pair(S.c1(), IntVector::unit(m, i));
    c2[m] = S.euler() - S.pair(S.c1(), omega);
    return c2;
}

/// X = P(L + O) over S with c1(L) = omega, basis (pullbacks of the working lattice, y).
/// Ring: y^2 = -omega y, so F(a,b,c) = 0, F(a,b,y) = a.b, F(a,y,y) = -a.omega, y^3 = omega^2.
/// c1 = f*(c1(S) + omega) + 2y, p1 = c1^2 - 2 c2.
inline ThreefoldPackage p1_bundle(const SurfaceData& S, const IntVector& omega) {
    require_rank(S.rank(), omega.size(), "omega");
    const std::size_t m = S.rank(), y = m;
    CubicForm F(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const IntVector ei = IntVector::unit(m, i);
        for (std::size_t j = i; j < m; ++j) F.set(i, j, y, S.pairing()(i, j));
        F.set(i, y, y, -S.pair(ei, omega));
    }
    F.set(y, y, y, S.pair(omega, omega));

    const IntVector base_c1 = S.c1() + omega;
    IntVector c1 = base_c1.appended(2);
    const LinearForm c2 = p1_bundle_c2(S, omega);
    LinearForm p1(m + 1);
    for (std::size_t k = 0; k < m + 1; ++k) p1[k] = eval_cubic(F, c1, c1, IntVector::unit(m + 1, k)) - 2 * c2[k];

    WallTuple t(0, std::move(F), std::move(p1), base_c1.all_even());
    BettiData b = BettiData::simply_connected(S.b2() + 1, 0);
    return ThreefoldPackage("P(L+O)/" + S.name() + " omega=" + omega.str(), std::move(t), b, std::move(c1), {true, false});
}

/// beta -> F(c1, c1, f*beta) on the working lattice of the base: the pushforward of c1(X)^2.
inline LinearForm pushforward_c1_squared(const ThreefoldPackage& bundle, std::size_t base_rank) {
    if (!bundle.c1()) throw InvalidArgument("bundle package carries no c1");
    const auto& c1 = *bundle.c1();
    LinearForm out(base_rank);
    for (std::size_t i = 0; i < base_rank; ++i) out[i] = eval_cubic(bundle.tuple().form(), c1, c1, IntVector::unit(c1.size(), i));
    return out;
}

/// K_X^3 after blowing up a smooth rational curve whose normal bundle has degree deg_normal.
inline Integer blow_up_rational_curve_delta(const Integer& K3, const Integer& deg_normal) { return K3 + 2 * deg_normal + 6; }

/// Betti numbers after blowing up a smooth rational curve: b2 and b4 grow by one.
inline BettiData blow_up_rational_curve_betti(const BettiData& b) {
    BettiData out = b;
    out.b[2] += 1;
    out.b[4] += 1;
    return out;
}

// ---------------------------------------------------------------------------

inline ThreefoldPackage projective_space_package() {
    WallTuple t(0, CubicForm(1, {{{0, 0, 0}, 1}}), LinearForm{4}, true);
    return ThreefoldPackage("P3", std::move(t), BettiData::simply_connected(1, 0), IntVector{4}, {true, false});
}

/// Smooth quadric in P^4: h^3 = 2, c1 = 3h, c2 = 4h^2, p1(h) = h^3 = 2. Not spin.
inline ThreefoldPackage quadric_package() {
    WallTuple t(0, CubicForm(1, {{{0, 0, 0}, 2}}), LinearForm{2}, false);
    return ThreefoldPackage("Q3", std::move(t), BettiData::simply_connected(1, 0), IntVector{3}, {true, false});
}

/// Quintic Calabi-Yau: h^3 = 5, c1 = 0, c2.h = 50, p1(h) = -100, b3 = 204.
inline ThreefoldPackage quintic_package() {
    WallTuple t(204, CubicForm(1, {{{0, 0, 0}, 5}}), LinearForm{-100}, true);
    return ThreefoldPackage("quintic", std::move(t), BettiData::simply_connected(1, 204), IntVector{0}, {true, true});
}

/// X_n = P(O(2n+1) + O) over P^2.
inline ThreefoldPackage xn_package(std::int64_t n) {
    return p1_bundle(projective_plane(), IntVector{2 * n + 1}).with_step("X_n n=" + std::to_string(n), "X_" + std::to_string(n));
}

inline std::vector<ThreefoldPackage> gallery() {
    std::vector<ThreefoldPackage> g;
    g.push_back(projective_space_package());
    g.push_back(quadric_package());
    g.push_back(blow_up_point(projective_space_package()).with_step("gallery", "Bl_pt_P3"));
    for (std::int64_t n = 0; n <= 3; ++n) g.push_back(xn_package(n));
    g.push_back(p1_bundle(projective_plane(), IntVector{-3}).with_step("gallery", "P(K+O)/P2"));
    g.push_back(p1_bundle(k3_surface(), IntVector{0, 0}).with_step("gallery", "K3xP1"));
    for (std::int64_t q : {3, 5})
        g.push_back(p1_bundle(dolgachev_surface(q), IntVector{1, 2}).with_step("gallery", "P(L+O)/S_" + std::to_string(q)));
    g.push_back(quintic_package());
    g.push_back(blow_up_point(quintic_package()).with_step("gallery", "Bl_pt_quintic"));
    return g;
}

inline std::optional<ThreefoldPackage> gallery_entry(const std::string& name) {
    for (auto& p : gallery())
        if (p.name() == name) return p;
    return std::nullopt;
}

}  // namespace spin6
