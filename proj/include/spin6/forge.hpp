// Infinite families M_r = (0, H, F, r (p1 + omega)) with omega == 0 mod 48 and
// r == 1 mod 48, all homotopy equivalent to the seed, and a certificate battery that
// refutes each terminal case of the spin minimal model program for a given tuple:
// point blow-up, general type, Kodaira dimension 0/1/2, Fano, quadric bundle over
// a curve, unramified conic bundle over a surface.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spin6/constructions.hpp"

namespace spin6 {

/// p1 of a point blow-up is never divisible by an integer greater than this.
inline constexpr int kBlowUpP1MaxDivisor = 4;

inline WallTuple forge_family(const WallTuple& seed, const LinearForm& omega, const Integer& r) {
    if (!seed.spin()) throw NonSpinTuple();
    if (seed.b3() != 0) throw InvalidArgument("forge seed must have b3 = 0");
    if (!is_admissible(seed)) throw InvalidArgument("forge seed is not admissible");
    require_rank(seed.rank(), omega.size(), "omega");
    for (const auto& c : omega)
        if (floor_mod(c, 48) != 0) throw InvalidArgument("omega must vanish mod 48, coefficient " + c.str() + " does not");
    if (floor_mod(r, 48) != 1) throw InvalidArgument("r must be 1 mod 48, got " + r.str());
    WallTuple out(0, seed.form(), r * (seed.p1() + omega), true);
    if (!is_admissible(out)) throw std::logic_error("forged tuple failed admissibility");
    return out;
}

// ---------------------------------------------------------------------------

struct SearchBounds {
    std::int64_t fano_c1_box = 16;  // |c1 coordinates| <= 16 covers c1(P^3) = 4h
    Integer hyperplane_bound = kDefaultHyperplaneBound;
};

enum class CaseKind { blowdown, general_type, kod012, fano, quadric_over_curve, conic_over_surface };
enum class CaseStatus { refuted, not_refuted, not_applicable, not_checked };

inline const char* to_string(CaseKind k) {
    switch (k) {
        case CaseKind::blowdown: return "blowdown";
        case CaseKind::general_type: return "general_type";
        case CaseKind::kod012: return "kod012";
        case CaseKind::fano: return "fano";
        case CaseKind::quadric_over_curve: return "quadric_over_curve";
        case CaseKind::conic_over_surface: return "conic_over_surface";
    }
    return "?";
}

inline const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::refuted: return "refuted";
        case CaseStatus::not_refuted: return "not_refuted";
        case CaseStatus::not_applicable: return "not_applicable";
        case CaseStatus::not_checked: return "not_checked";
    }
    return "?";
}

struct LineCheck {
    IntVector line;
    Integer p1_value;
};

struct HyperplaneCheck {
    LinearForm hyperplane;
    bool p1_restriction_nonzero = false;
};

/// One terminal case of the battery. Only the fields relevant to `kind` are filled.
struct CaseRecord {
    CaseKind kind{};
    CaseStatus status = CaseStatus::not_checked;
    std::string rule;
    std::string evidence;
    std::optional<Integer> p1_content;
    std::optional<Integer> threshold;
    std::vector<Integer> fano_c1_cubed_allowed;  // values of c1^3 the divisibility rule leaves open
    std::optional<IntVector> witness;            // c1 satisfying every constraint of the case
    std::vector<LineCheck> lines;
    std::vector<HyperplaneCheck> hyperplanes;
    std::optional<bool> p1_kernel_vanishes;  // F == 0 on ker(p1)
};

struct Certificate {
    std::string seed_id;
    std::optional<Integer> r;
    SearchBounds bounds;
    std::array<CaseRecord, 6> cases;

    bool certified() const {
        for (const auto& c : cases)
            if (c.status != CaseStatus::refuted && c.status != CaseStatus::not_applicable) return false;
        return true;
    }
    std::vector<std::string> open_cases() const {
        std::vector<std::string> out;
        for (const auto& c : cases)
            if (c.status != CaseStatus::refuted && c.status != CaseStatus::not_applicable) out.emplace_back(to_string(c.kind));
        return out;
    }
    const CaseRecord& operator[](CaseKind k) const { return cases[static_cast<std::size_t>(k)]; }
};

namespace detail {

inline CaseRecord blowdown_case(const WallTuple& t) {
    CaseRecord c;
    c.kind = CaseKind::blowdown;
    const Integer g = t.p1().content();
    c.p1_content = g;
    c.threshold = kBlowUpP1MaxDivisor;
    c.rule = "p1 of a point blow-up is not divisible by any integer > 4";
    const bool refuted = g == 0 || g > kBlowUpP1MaxDivisor;
    c.status = refuted ? CaseStatus::refuted : CaseStatus::not_refuted;
    c.evidence = "content(p1) = " + g.str();
    return c;
}

inline CaseRecord general_type_case(const WallTuple& t) {
    CaseRecord c;
    c.kind = CaseKind::general_type;
    c.rule = "b3 = 0: c1c2 = 24 + 24 h20 > 0 contradicts Miyaoka-Yau c1c2 <= 3 c1^3 / 8 < 0";
    const bool applies = t.b3() == 0 && t.spin();
    c.status = applies ? CaseStatus::refuted : CaseStatus::not_refuted;
    c.evidence = "b3 = " + std::to_string(t.b3()) + (t.spin() ? ", spin" : ", not spin");
    return c;
}

inline CaseRecord kod012_case(const WallTuple& t, const BettiData& b) {
    CaseRecord c;
    c.kind = CaseKind::kod012;
    const Integer g = t.p1().content();
    const Integer threshold = 48 * (1 + Integer(b.b2()));
    c.p1_content = g;
    c.threshold = threshold;
    c.rule = "c1^3 = 0 forces p1.c1 = -48 - 48 h20 with 0 <= h20 <= b2";
    const bool refuted = g == 0 || g > threshold;
    c.status = refuted ? CaseStatus::refuted : CaseStatus::not_refuted;
    c.evidence = "content(p1) = " + g.str() + ", threshold 48(1 + b2) = " + threshold.str();
    return c;
}

// Integer D with p1(D) = m and F(D) = target, searched exactly for rank <= 2.
// Returns {decided, witness}; decided = false when the equation system is not finite.
inline std::pair<bool, std::optional<IntVector>> solve_fano_exact(const WallTuple& t, const Integer& m, const Integer& target) {
    const auto& F = t.form();
    if (t.rank() == 1) {
        const Integer p = t.p1()[0], f = F.at(0, 0, 0);
        if (p != 0) {
            if (!divides(p, m)) return {true, std::nullopt};
            const Integer k = m / p;
            if (f * k * k * k == target) return {true, IntVector{k}};
            return {true, std::nullopt};
        }
        if (m != 0) return {true, std::nullopt};
        if (f == 0) return {target != 0, target == 0 ? std::optional<IntVector>(IntVector{0}) : std::nullopt};
        auto roots = integer_roots({-target, 0, 0, f});
        if (roots.empty()) return {true, std::nullopt};
        return {true, IntVector{roots.front()}};
    }
    // rank 2
    const Integer a = t.p1()[0], b = t.p1()[1];
    if (a == 0 && b == 0) return {false, std::nullopt};
    const auto eg = extended_gcd(a, b);
    if (!divides(eg.g, m)) return {true, std::nullopt};
    const IntVector D0{eg.x * (m / eg.g), eg.y * (m / eg.g)};
    const IntVector u{b / eg.g, -a / eg.g};
    std::vector<Integer> poly{eval_cubic_diag(F, D0) - target, 3 * eval_cubic(F, D0, D0, u), 3 * eval_cubic(F, D0, u, u),
                              eval_cubic_diag(F, u)};
    try {
        auto roots = integer_roots(poly);
        if (roots.empty()) return {true, std::nullopt};
        return {true, D0 + roots.front() * u};
    } catch (const ZeroPolynomial&) {
        return {true, D0};  // every point of the affine line is a solution
    }
}

inline CaseRecord fano_case(const WallTuple& t, const SearchBounds& bounds) {
    CaseRecord c;
    c.kind = CaseKind::fano;
    c.rule = "Fano: 2 <= c1^3 <= 64, c1c2 = 24, i.e. p1.c1 = c1^3 - 48; c1 even";
    const Integer g = t.p1().content();
    c.p1_content = g;

    // c1 = 2D: c1^3 = 8 F(D) and p1.c1 = 2 p1(D) in 2g Z.
    for (int v = kFanoMinC1Cubed; v <= kFanoMaxC1Cubed; ++v) {
        if (v % 8 != 0) continue;
        const Integer p1c1 = v - 2 * kFanoC1C2;
        if (divides(2 * g, p1c1)) c.fano_c1_cubed_allowed.push_back(v);
    }
    if (c.fano_c1_cubed_allowed.empty()) {
        c.status = CaseStatus::refuted;
        c.evidence = "content(p1) = " + g.str() + " leaves no admissible value of c1^3";
        return c;
    }

    const std::int64_t half = bounds.fano_c1_box / 2;
    if (half >= 0) {
        for (const auto& D : enumerate_ac_structures(WallTuple(0, t.form(), t.p1(), true), half)) {
            const Integer cube = t.cube(D.c1());
            if (cube < kFanoMinC1Cubed || cube > kFanoMaxC1Cubed) continue;
            if (t.p1_of(D.c1()) == cube - 2 * kFanoC1C2) {
                c.witness = D.c1();
                c.status = CaseStatus::not_refuted;
                c.evidence = "c1 = " + D.c1().str() + " satisfies the Fano constraints";
                return c;
            }
        }
    }

    if (t.rank() <= 2) {
        for (const auto& v : c.fano_c1_cubed_allowed) {
            const Integer m = (v - 2 * kFanoC1C2) / 2;
            auto [decided, D] = solve_fano_exact(t, m, v / 8);
            if (!decided) {
                c.status = CaseStatus::not_refuted;
                c.evidence = "p1 = 0: F(D) = " + Integer(v / 8).str() + " is not decided outside the box";
                return c;
            }
            if (D) {
                c.witness = 2 * *D;
                c.status = CaseStatus::not_refuted;
                c.evidence = "c1 = " + c.witness->str() + " satisfies the Fano constraints";
                return c;
            }
        }
        c.status = CaseStatus::refuted;
        c.evidence = "no even c1 within the box, and the exact solution of p1(c1) = c1^3 - 48 has no Fano value";
        return c;
    }
    c.status = CaseStatus::not_refuted;
    c.evidence = "rank >= 3: admissible values of c1^3 remain outside the search box";
    return c;
}

inline CaseRecord quadric_case(const WallTuple& t) {
    CaseRecord c;
    c.kind = CaseKind::quadric_over_curve;
    c.rule = "fibre class Q spans a line with F = 0 and p1.Q = p1(Q) = 0";
    if (t.rank() != 2) {
        c.status = CaseStatus::not_applicable;
        c.evidence = "quadric bundles over a curve with b1 = b3 = 0 have b2 = 2";
        return c;
    }
    if (t.form().is_zero()) {
        c.status = CaseStatus::not_refuted;
        c.evidence = "cubic form vanishes identically: every line is a candidate fibre class";
        return c;
    }
    bool all_nonzero = true;
    for (const auto& v : find_vanishing_lines(t.form())) {
        Integer val = t.p1_of(v);
        if (val == 0) all_nonzero = false;
        c.lines.push_back({v, std::move(val)});
    }
    c.status = all_nonzero ? CaseStatus::refuted : CaseStatus::not_refuted;
    c.evidence = std::to_string(c.lines.size()) + " vanishing line(s)";
    return c;
}

inline bool restriction_nonzero(const LinearForm& p, const LinearForm& phi) {
    for (const auto& u : rational_kernel_span(phi))
        if (eval_linear(p, u) != 0) return true;
    return false;
}

inline CaseRecord conic_case(const WallTuple& t, const SearchBounds& bounds) {
    CaseRecord c;
    c.kind = CaseKind::conic_over_surface;
    c.rule = "f*H^2(S) is a hyperplane in {F = 0} and p1 lies in f*H^4(S), i.e. p1 vanishes on it";
    if (t.rank() < 2) {
        c.status = CaseStatus::not_applicable;
        c.evidence = "a conic bundle over a surface has b2 >= 2";
        return c;
    }
    const auto search = find_vanishing_hyperplanes(t.form(), bounds.hyperplane_bound);
    bool any_bad = false;
    for (const auto& phi : search.hyperplanes) {
        const bool nz = restriction_nonzero(t.p1(), phi);
        if (!nz) any_bad = true;
        c.hyperplanes.push_back({phi, nz});
    }
    if (!t.p1().is_zero()) {
        // Any hyperplane on which p1 vanishes is ker(p1) itself, so one exact test decides the case.
        const bool kernel_vanishes = vanishes_on_hyperplane(t.form(), t.p1());
        c.p1_kernel_vanishes = kernel_vanishes;
        c.status = kernel_vanishes ? CaseStatus::not_refuted : CaseStatus::refuted;
        c.evidence = kernel_vanishes ? "F vanishes on ker(p1) = " + t.p1().primitive_part().sign_normalized().str()
                                     : "F does not vanish on ker(p1); " + std::to_string(search.hyperplanes.size()) +
                                           " vanishing hyperplane(s) within bound, none with p1 restriction zero";
        return c;
    }
    if (any_bad) {
        c.status = CaseStatus::not_refuted;
        c.evidence = "p1 = 0 and F vanishes on a hyperplane";
    } else if (search.exact) {
        c.status = CaseStatus::refuted;
        c.evidence = "p1 = 0 but F vanishes on no hyperplane";
    } else {
        c.status = CaseStatus::not_checked;
        c.evidence = "p1 = 0 and no vanishing hyperplane within bound " + search.bound.str();
    }
    return c;
}

}  // namespace detail

/// Runs the six-case battery. Requires a spin tuple with b3 = 0.
inline Certificate certify_non_kaehler(const WallTuple& t, const BettiData& b, const SearchBounds& bounds = {},
                                       std::string seed_id = {}, std::optional<Integer> r = std::nullopt) {
    if (!t.spin()) throw NonSpinTuple();
    if (t.b3() != 0) throw InvalidArgument("certification needs b3 = 0");
    b.validate();
    if (b.b3() != 0 || b.b2() < static_cast<std::int64_t>(t.rank())) throw InvalidArgument("Betti data inconsistent with the tuple");
    Certificate cert;
    cert.seed_id = std::move(seed_id);
    cert.r = std::move(r);
    cert.bounds = bounds;
    cert.cases = {detail::blowdown_case(t),  detail::general_type_case(t),  detail::kod012_case(t, b),
                  detail::fano_case(t, bounds), detail::quadric_case(t), detail::conic_case(t, bounds)};
    return cert;
}

// ---------------------------------------------------------------------------

struct GenericityCondition {
    std::string kind;  // "line", "hyperplane", "kernel"
    std::vector<Integer> coords;
    Integer value;  // (p1 + omega)(v) for lines; 1/0 flags otherwise
    bool holds = false;
};

struct GenericityReport {
    std::vector<GenericityCondition> conditions;
    Integer hyperplane_bound;
    bool accepted() const {
        for (const auto& c : conditions)
            if (!c.holds) return false;
        return true;
    }
};

/// Finite stand-in for "omega general": p1 + omega must not vanish on any vanishing
/// line (rank 2) or on any vanishing hyperplane of F within the bound, and F must not
/// vanish on ker(p1 + omega).
inline GenericityReport genericity_check(const WallTuple& seed, const LinearForm& omega, const SearchBounds& bounds = {}) {
    require_rank(seed.rank(), omega.size(), "omega");
    GenericityReport rep;
    rep.hyperplane_bound = bounds.hyperplane_bound;
    if (seed.rank() < 2) return rep;
    const LinearForm q = seed.p1() + omega;
    if (seed.rank() == 2) {
        if (seed.form().is_zero()) {
            rep.conditions.push_back({"line", {}, 0, false});
            return rep;
        }
        for (const auto& v : find_vanishing_lines(seed.form())) {
            Integer val = eval_linear(q, v);
            const bool ok = val != 0;
            rep.conditions.push_back({"line", v.values(), std::move(val), ok});
        }
        return rep;
    }
    for (const auto& phi : find_vanishing_hyperplanes(seed.form(), bounds.hyperplane_bound).hyperplanes) {
        const bool ok = detail::restriction_nonzero(q, phi);
        rep.conditions.push_back({"hyperplane", phi.values(), ok ? 1 : 0, ok});
    }
    const bool kernel_ok = q.is_zero() ? false : !vanishes_on_hyperplane(seed.form(), q);
    rep.conditions.push_back({"kernel", q.values(), kernel_ok ? 1 : 0, kernel_ok});
    return rep;
}

}  // namespace spin6
