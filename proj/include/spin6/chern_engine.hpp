// Almost complex structures, Chern numbers from ring data, and the single-structure
// Kaehler obstructions (Riemann-Roch integrality, Miyaoka-Yau, Kodaira 0/1/2,
// b3 = 0 spin exclusion of general type, non-uniruled envelope, b2 = 1 rules).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spin6/wall_class.hpp"

namespace spin6 {

/// Fano threefolds satisfy 2 <= c1^3 <= 64 and chi(O) = 1 (Iskovskikh, Mori-Mukai).
inline constexpr int kFanoMinC1Cubed = 2;
inline constexpr int kFanoMaxC1Cubed = 64;
inline constexpr int kFanoC1C2 = 24;

/// Rank-one Fano threefolds: c1 = i L with index i in 1..4, hence
/// p1(L) = (c1^3 - 48) / i lies in [-46, 16]. Any |p1(L)| > 46 rules out Fano.
inline constexpr int kFanoRankOneP1Bound = 46;

/// Homotopy class of almost complex structures on a spin 6-manifold, labelled by c1 in 2H^2.
class ACStructure {
  public:
    explicit ACStructure(IntVector c1) : c1_(std::move(c1)) {
        if (!c1_.all_even()) throw InvalidArgument("first Chern class of a spin almost complex structure must be even");
    }
    const IntVector& c1() const noexcept { return c1_; }
    friend bool operator==(const ACStructure&, const ACStructure&) = default;

  private:
    IntVector c1_;
};

/// All c1 in 2Z^n with |coordinates| <= 2*box, lexicographic.
inline std::vector<ACStructure> enumerate_ac_structures(const WallTuple& t, std::int64_t box) {
    if (!t.spin()) throw NonSpinTuple();
    if (box < 0) throw InvalidArgument("box must be non-negative");
    const std::size_t n = t.rank();
    std::vector<ACStructure> out;
    std::vector<std::int64_t> d(n, -box);
    while (true) {
        IntVector c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = 2 * d[i];
        out.emplace_back(std::move(c));
        std::size_t pos = n;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (d[pos] < box) {
                ++d[pos];
                done = false;
                break;
            }
            d[pos] = -box;
        }
        if (done) return out;
    }
}

class ImpossibleChernData : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

struct ChernNumbers {
    Integer c1_cubed;
    Integer c1c2;
    Integer c3;
    Rational chi_O;  // c1c2 / 24

    std::optional<Integer> chi_O_integer() const {
        if (boost::multiprecision::denominator(chi_O) != 1) return std::nullopt;
        return boost::multiprecision::numerator(chi_O);
    }
    friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;
};

/// c1^3 = F(c1), c1c2 = (F(c1) - p1(c1)) / 2 from p1 = c1^2 - 2 c2, c3 = Euler number.
inline ChernNumbers chern_numbers(const WallTuple& t, const BettiData& b, const IntVector& c1) {
    require_rank(t.rank(), c1.size(), "c1");
    b.validate();
    if (b.b3() != t.b3()) throw InvalidArgument("Betti data disagree with the tuple on b3");
    if (b.b2() < static_cast<std::int64_t>(t.rank())) throw InvalidArgument("b2 is smaller than the lattice rank");
    if (t.spin() && !c1.all_even()) throw InvalidArgument("c1 must be even on a spin tuple");
    ChernNumbers out;
    out.c1_cubed = t.cube(c1);
    const Integer twice_c1c2 = out.c1_cubed - t.p1_of(c1);
    if (!is_even(twice_c1c2))
        throw ImpossibleChernData("F(c1) - p1(c1) = " + twice_c1c2.str() + " is odd: no complex structure has this c1");
    out.c1c2 = twice_c1c2 / 2;
    out.c3 = b.euler();
    out.chi_O = Rational(out.c1c2, 24);
    return out;
}

inline ChernNumbers chern_numbers(const WallTuple& t, const BettiData& b, const ACStructure& a) { return chern_numbers(t, b, a.c1()); }

// ---------------------------------------------------------------------------

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

struct Check {
    Verdict verdict = Verdict::not_applicable;
    std::string evidence;
};

/// Caller-supplied birational hypotheses; the tuple alone cannot decide them.
struct Hypotheses {
    bool minimal_general_type = false;
    bool non_uniruled = false;
    bool kodaira_0_1_2 = false;
};

struct CorBounds {
    Integer lower;
    Integer upper;  // always 0
};

/// Non-uniruled spin envelope: min(64 chi - 8 b2 + 8, -8 b2 + 8) <= c1^3 <= 0.
inline CorBounds cor_ineq_bounds(const BettiData& b, const Integer& chi_O) {
    const Integer b2 = b.b2();
    Integer a = 64 * chi_O - 8 * b2 + 8;
    Integer c = -8 * b2 + 8;
    return {a < c ? a : c, 0};
}

struct ObstructionReport {
    ChernNumbers chern;
    Integer h20_bound;  // h^{2,0} <= b2
    bool general_type_impossible = false;

    Check rr_integrality;     // c1c2 in 24 Z
    Check rr_hodge_range;     // b3 = 0: c1c2 = 24 + 24 h^{2,0}, 0 <= h^{2,0} <= b2
    Check miyaoka_yau;        // minimal general type: 0 > c1^3, 3 c1^3 >= 8 c1c2
    Check kodaira_vanishing;  // kod 0,1,2: c1^3 = 0
    Check general_type_spin;  // b3 = 0 and spin: general type impossible
    Check non_uniruled_envelope;
    std::optional<CorBounds> envelope;

    /// True when no applicable check failed.
    bool consistent() const {
        for (const Check* c : {&rr_integrality, &rr_hodge_range, &miyaoka_yau, &kodaira_vanishing, &general_type_spin, &non_uniruled_envelope})
            if (c->verdict == Verdict::fail) return false;
        return true;
    }
};

inline ObstructionReport kaehler_obstructions(const WallTuple& t, const BettiData& b, const IntVector& c1, const Hypotheses& h) {
    ObstructionReport r;
    r.chern = chern_numbers(t, b, c1);
    r.h20_bound = b.b2();
    const Integer& c13 = r.chern.c1_cubed;
    const Integer& c1c2 = r.chern.c1c2;
    const auto chi = r.chern.chi_O_integer();

    r.rr_integrality.verdict = chi ? Verdict::pass : Verdict::fail;
    r.rr_integrality.evidence = "c1c2 = " + c1c2.str() + (chi ? " = 24 * " + chi->str() : " is not divisible by 24");

    if (t.b3() == 0) {
        const Integer hi = 24 * (1 + r.h20_bound);
        const bool ok = chi && c1c2 >= 24 && c1c2 <= hi;
        r.rr_hodge_range.verdict = ok ? Verdict::pass : Verdict::fail;
        r.rr_hodge_range.evidence = "c1c2 = " + c1c2.str() + ", required in 24 + 24 h20 with 0 <= h20 <= " + r.h20_bound.str();
    }

    if (h.minimal_general_type) {
        const bool ok = c13 < 0 && 3 * c13 >= 8 * c1c2;
        r.miyaoka_yau.verdict = ok ? Verdict::pass : Verdict::fail;
        r.miyaoka_yau.evidence = "c1^3 = " + c13.str() + ", 3 c1^3 = " + Integer(3 * c13).str() + ", 8 c1c2 = " + Integer(8 * c1c2).str();
    }

    if (h.kodaira_0_1_2) {
        r.kodaira_vanishing.verdict = c13 == 0 ? Verdict::pass : Verdict::fail;
        r.kodaira_vanishing.evidence = "c1^3 = " + c13.str();
    }

    if (t.b3() == 0 && t.spin()) {
        // b1 = b3 = 0 forces c1c2 = 24 + 24 h20 > 0, while Miyaoka-Yau forces c1c2 < 0.
        r.general_type_impossible = true;
        r.general_type_spin.verdict = h.minimal_general_type ? Verdict::fail : Verdict::pass;
        r.general_type_spin.evidence = "b3 = 0 and spin: Riemann-Roch gives c1c2 >= 24 > 0, Miyaoka-Yau needs c1c2 < 0";
    }

    if (h.non_uniruled && t.spin() && chi) {
        r.envelope = cor_ineq_bounds(b, *chi);
        const bool ok = c13 >= r.envelope->lower && c13 <= r.envelope->upper;
        r.non_uniruled_envelope.verdict = ok ? Verdict::pass : Verdict::fail;
        r.non_uniruled_envelope.evidence = "c1^3 = " + c13.str() + " against [" + r.envelope->lower.str() + ", 0]";
    }
    return r;
}

// ---------------------------------------------------------------------------

enum class RankOneCase { refuted, open };

struct RankOneVerdict {
    Integer cube_L;  // F(L) > 0
    Integer p1_L;
    RankOneCase calabi_yau = RankOneCase::open;
    RankOneCase fano = RankOneCase::open;
    RankOneCase ample_canonical = RankOneCase::open;
    Integer threshold;
    std::optional<int> fano_index;  // i in 1..4 with c1 = i L matching every Fano constraint
    bool certified() const {
        return calabi_yau == RankOneCase::refuted && fano == RankOneCase::refuted && ample_canonical == RankOneCase::refuted;
    }
};

/// b2 = 1: a Kaehler structure is Fano, Calabi-Yau or has ample K.
/// Calabi-Yau is refuted by p1(L) >= 0 (Miyaoka gives p1.L < 0 for the ample generator L);
/// Fano and ample K are refuted when |p1(L)| exceeds the caller's boundedness threshold.
/// Fano additionally stays open when some index i in 1..4 gives c1 = i L with
/// 2 <= i^3 F(L) <= 64 and i p1(L) = i^3 F(L) - 48, whatever the threshold.
inline RankOneVerdict b2_one_certify(const WallTuple& t, const Integer& threshold) {
    if (t.rank() != 1) throw InvalidArgument("b2_one_certify needs a rank-1 tuple");
    if (threshold < 0) throw InvalidArgument("threshold must be non-negative");
    const Integer f = t.form().at(0, 0, 0);
    if (f == 0) throw InvalidArgument("rank-1 form with L^3 = 0 for both generators is not of Kaehler type");
    RankOneVerdict v;
    v.threshold = threshold;
    v.cube_L = f > 0 ? f : Integer(-f);
    v.p1_L = f > 0 ? t.p1()[0] : Integer(-t.p1()[0]);
    if (v.p1_L >= 0) v.calabi_yau = RankOneCase::refuted;
    for (int i = 1; i <= 4 && !v.fano_index; ++i) {
        const Integer c13 = Integer(i * i * i) * v.cube_L;
        if (c13 >= kFanoMinC1Cubed && c13 <= kFanoMaxC1Cubed && i * v.p1_L == c13 - 48) v.fano_index = i;
    }
    if (abs_value(v.p1_L) > threshold) {
        if (!v.fano_index) v.fano = RankOneCase::refuted;
        v.ample_canonical = RankOneCase::refuted;
    }
    return v;
}

}  // namespace spin6
