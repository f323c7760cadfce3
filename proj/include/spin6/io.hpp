// JSON documents for tuples, surfaces, reports and certificates.
//
// Integers are JSON numbers while |v| <= 2^53 - 1 and decimal strings beyond that;
// both spellings are accepted on input.
#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spin6/forge.hpp"

namespace spin6::io {

using nlohmann::json;

/// Malformed input document; the message names the offending field.
class DocumentError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

inline const Integer kMaxSafeJsonInteger = (Integer(1) << 53) - 1;

inline json integer_to_json(const Integer& v) {
    if (abs_value(v) <= kMaxSafeJsonInteger) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer integer_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw DocumentError("field '" + field + "': \"" + s + "\" is not a decimal integer");
        return Integer(s);
    }
    throw DocumentError("field '" + field + "': expected an integer, got " + std::string(j.type_name()));
}

inline std::int64_t small_from_json(const json& j, const std::string& field) {
    const Integer v = integer_from_json(j, field);
    if (abs_value(v) > Integer(1) << 40) throw DocumentError("field '" + field + "': value out of range");
    return static_cast<std::int64_t>(v);
}

inline json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

inline std::vector<Integer> integers_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw DocumentError("field '" + field + "': expected an array");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline const json& require_field(const json& j, const char* key) {
    if (!j.is_object()) throw DocumentError("document must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw DocumentError(std::string("missing field '") + key + "'");
    return *it;
}

// ---------------------------------------------------------------------------

struct TupleDocument {
    std::optional<std::string> name;
    std::int64_t b3 = 0;
    bool spin = true;
    CubicForm cubic;
    LinearForm p1;
    std::optional<std::int64_t> betti_b2;
    std::optional<IntVector> c1;
    std::optional<std::string> seed;  // forged documents: seed name and r
    std::optional<Integer> r;

    std::size_t rank() const { return cubic.rank(); }
    WallTuple tuple() const { return WallTuple(b3, cubic, p1, spin); }
    BettiData betti() const { return BettiData::simply_connected(betti_b2.value_or(static_cast<std::int64_t>(rank())), b3); }

    friend bool operator==(const TupleDocument&, const TupleDocument&) = default;
};

inline TupleDocument document_from(const WallTuple& t, std::optional<std::string> name = std::nullopt,
                                   std::optional<BettiData> betti = std::nullopt, std::optional<IntVector> c1 = std::nullopt) {
    TupleDocument d;
    d.name = std::move(name);
    d.b3 = t.b3();
    d.spin = t.spin();
    d.cubic = t.form();
    d.p1 = t.p1();
    if (betti) d.betti_b2 = betti->b2();
    d.c1 = std::move(c1);
    return d;
}

inline TupleDocument document_from(const ThreefoldPackage& p) { return document_from(p.tuple(), p.name(), p.betti(), p.c1()); }

inline json to_json(const TupleDocument& d) {
    json j = json::object();
    if (d.name) j["name"] = *d.name;
    j["rank"] = d.rank();
    j["b3"] = d.b3;
    j["spin"] = d.spin;
    json cubic = json::array();
    for (const auto& [t, v] : d.cubic.entries()) cubic.push_back({{"i", t[0]}, {"j", t[1]}, {"k", t[2]}, {"v", integer_to_json(v)}});
    j["cubic"] = std::move(cubic);
    j["p1"] = integers_to_json(d.p1.values());
    if (d.betti_b2) j["betti"] = {{"b2", *d.betti_b2}, {"b3", d.b3}};
    if (d.c1) j["c1"] = integers_to_json(d.c1->values());
    if (d.seed) j["seed"] = *d.seed;
    if (d.r) j["r"] = integer_to_json(*d.r);
    return j;
}

inline TupleDocument tuple_document_from_json(const json& j) {
    TupleDocument d;
    if (auto it = j.find("name"); j.is_object() && it != j.end()) {
        if (!it->is_string()) throw DocumentError("field 'name': expected a string");
        d.name = it->get<std::string>();
    }
    const std::int64_t rank = small_from_json(require_field(j, "rank"), "rank");
    if (rank < 0 || rank > 64) throw DocumentError("field 'rank': must be between 0 and 64");
    const auto n = static_cast<std::size_t>(rank);
    d.b3 = small_from_json(require_field(j, "b3"), "b3");
    if (d.b3 < 0 || d.b3 % 2 != 0) throw DocumentError("field 'b3': must be even and non-negative");
    const json& spin = require_field(j, "spin");
    if (!spin.is_boolean()) throw DocumentError("field 'spin': expected a boolean");
    d.spin = spin.get<bool>();

    d.cubic = CubicForm(n);
    const json& cubic = require_field(j, "cubic");
    if (!cubic.is_array()) throw DocumentError("field 'cubic': expected an array");
    for (std::size_t e = 0; e < cubic.size(); ++e) {
        const std::string at = "cubic[" + std::to_string(e) + "]";
        const json& entry = cubic[e];
        if (!entry.is_object()) throw DocumentError("field '" + at + "': expected an object {i,j,k,v}");
        std::int64_t idx[3];
        const char* keys[3] = {"i", "j", "k"};
        for (int c = 0; c < 3; ++c) {
            auto it = entry.find(keys[c]);
            if (it == entry.end()) throw DocumentError("field '" + at + "." + keys[c] + "': missing");
            idx[c] = small_from_json(*it, at + "." + keys[c]);
            if (idx[c] < 0 || idx[c] >= rank) throw DocumentError("field '" + at + "." + keys[c] + "': index out of range");
        }
        if (!(idx[0] <= idx[1] && idx[1] <= idx[2])) throw DocumentError("field '" + at + "': indices must satisfy i <= j <= k");
        auto vit = entry.find("v");
        if (vit == entry.end()) throw DocumentError("field '" + at + ".v': missing");
        const auto ui = static_cast<std::size_t>(idx[0]), uj = static_cast<std::size_t>(idx[1]), uk = static_cast<std::size_t>(idx[2]);
        if (d.cubic.entries().count({ui, uj, uk})) throw DocumentError("field '" + at + "': duplicate triple");
        d.cubic.set(ui, uj, uk, integer_from_json(*vit, at + ".v"));
    }

    d.p1 = LinearForm(integers_from_json(require_field(j, "p1"), "p1"));
    if (d.p1.size() != n) throw DocumentError("field 'p1': length must equal rank");

    if (auto it = j.find("betti"); it != j.end()) {
        if (!it->is_object()) throw DocumentError("field 'betti': expected an object");
        d.betti_b2 = small_from_json(require_field(*it, "b2"), "betti.b2");
        if (*d.betti_b2 < rank) throw DocumentError("field 'betti.b2': smaller than rank");
        if (auto b3 = it->find("b3"); b3 != it->end() && small_from_json(*b3, "betti.b3") != d.b3)
            throw DocumentError("field 'betti.b3': disagrees with 'b3'");
    }
    if (auto it = j.find("c1"); it != j.end()) {
        d.c1 = IntVector(integers_from_json(*it, "c1"));
        if (d.c1->size() != n) throw DocumentError("field 'c1': length must equal rank");
        if (d.spin && !d.c1->all_even()) throw DocumentError("field 'c1': coordinates must be even on a spin tuple");
    }
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_string()) throw DocumentError("field 'seed': expected a string");
        d.seed = it->get<std::string>();
    }
    if (auto it = j.find("r"); it != j.end()) d.r = integer_from_json(*it, "r");
    return d;
}

inline json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(source + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline TupleDocument load_tuple_document(const std::string& path) {
    const json j = parse_json_text(read_file(path), path);
    try {
        return tuple_document_from_json(j);
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------

inline json to_json(const SurfaceData& s) {
    json pairing = json::array();
    for (std::size_t i = 0; i < s.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.rank(); ++j) row.push_back(integer_to_json(s.pairing()(i, j)));
        pairing.push_back(std::move(row));
    }
    return {{"name", s.name()},   {"rank", s.rank()},          {"pairing", pairing},
            {"c1", integers_to_json(s.c1().values())}, {"euler", integer_to_json(s.euler())}, {"b2", s.b2()},
            {"chi_O", integer_to_json(s.chi_O())}};
}

inline json to_json(const ChernNumbers& c) {
    json j = {{"c1_cubed", integer_to_json(c.c1_cubed)}, {"c1c2", integer_to_json(c.c1c2)}, {"c3", integer_to_json(c.c3)},
              {"chi_O", to_string(c.chi_O)}};
    return j;
}

inline json to_json(const Check& c) { return {{"verdict", to_string(c.verdict)}, {"evidence", c.evidence}}; }

inline json to_json(const ObstructionReport& r) {
    json j = {{"chern", to_json(r.chern)},
              {"h20_bound", integer_to_json(r.h20_bound)},
              {"general_type_impossible", r.general_type_impossible},
              {"rr_integrality", to_json(r.rr_integrality)},
              {"rr_hodge_range", to_json(r.rr_hodge_range)},
              {"miyaoka_yau", to_json(r.miyaoka_yau)},
              {"kodaira_vanishing", to_json(r.kodaira_vanishing)},
              {"general_type_spin", to_json(r.general_type_spin)},
              {"non_uniruled_envelope", to_json(r.non_uniruled_envelope)},
              {"consistent", r.consistent()}};
    if (r.envelope) j["envelope"] = {{"lower", integer_to_json(r.envelope->lower)}, {"upper", integer_to_json(r.envelope->upper)}};
    return j;
}

inline json to_json(const CaseRecord& c) {
    json j = {{"case", to_string(c.kind)}, {"status", to_string(c.status)}, {"rule", c.rule}, {"evidence", c.evidence}};
    if (c.p1_content) j["p1_content"] = integer_to_json(*c.p1_content);
    if (c.threshold) j["threshold"] = integer_to_json(*c.threshold);
    if (c.kind == CaseKind::fano) j["c1_cubed_allowed"] = integers_to_json(c.fano_c1_cubed_allowed);
    if (c.witness) j["witness"] = integers_to_json(c.witness->values());
    if (c.kind == CaseKind::quadric_over_curve) {
        json lines = json::array();
        for (const auto& l : c.lines) lines.push_back({{"line", integers_to_json(l.line.values())}, {"p1", integer_to_json(l.p1_value)}});
        j["lines"] = std::move(lines);
    }
    if (c.kind == CaseKind::conic_over_surface) {
        json hs = json::array();
        for (const auto& h : c.hyperplanes)
            hs.push_back({{"hyperplane", integers_to_json(h.hyperplane.values())}, {"p1_restriction_nonzero", h.p1_restriction_nonzero}});
        j["hyperplanes"] = std::move(hs);
        if (c.p1_kernel_vanishes) j["p1_kernel_vanishes"] = *c.p1_kernel_vanishes;
    }
    return j;
}

inline const char* verdict_name(const Certificate& c) { return c.certified() ? "certified-non-kaehler" : "inconclusive"; }

inline json to_json(const Certificate& c) {
    json cases = json::array();
    for (const auto& rec : c.cases) cases.push_back(to_json(rec));
    return {{"seed", c.seed_id},
            {"r", c.r ? integer_to_json(*c.r) : json(nullptr)},
            {"bounds", {{"fano_c1_box", c.bounds.fano_c1_box}, {"hyperplane_bound", integer_to_json(c.bounds.hyperplane_bound)}}},
            {"cases", std::move(cases)},
            {"verdict", verdict_name(c)},
            {"open_cases", c.open_cases()}};
}

inline json to_json(const GenericityReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions)
        conds.push_back({{"kind", c.kind}, {"coords", integers_to_json(c.coords)}, {"value", integer_to_json(c.value)}, {"holds", c.holds}});
    return {{"conditions", std::move(conds)}, {"hyperplane_bound", integer_to_json(r.hyperplane_bound)}, {"accepted", r.accepted()}};
}

}  // namespace spin6::io
