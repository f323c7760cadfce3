// Command-line front end. `run` is the whole program; tools/spin6.cpp only forwards argv.
//
// Tuple inputs are JSON files or `gallery:<name>` for a built-in package.
// Exit codes: 0 success, 1 invalid input, 2 inconclusive certification.
#pragma once

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spin6/io.hpp"

namespace spin6::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kInconclusive = 2 };

inline constexpr const char* kGalleryPrefix = "gallery:";

inline io::TupleDocument load_source(const std::string& source) {
    if (source.rfind(kGalleryPrefix, 0) == 0) {
        const std::string name = source.substr(std::char_traits<char>::length(kGalleryPrefix));
        auto pkg = gallery_entry(name);
        if (!pkg) throw io::DocumentError("unknown gallery entry '" + name + "'");
        return io::document_from(*pkg);
    }
    return io::load_tuple_document(source);
}

/// "4,-2,0" -> integer list; an empty string is the empty list.
inline std::vector<Integer> parse_integer_list(const std::string& text, const std::string& flag) {
    std::vector<Integer> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        out.push_back(io::integer_from_json(io::json(item), flag));
    }
    return out;
}

inline ThreefoldPackage package_of(const io::TupleDocument& d) {
    return ThreefoldPackage(d.name.value_or("tuple"), d.tuple(), d.betti(), d.c1);
}

inline SurfaceData surface_named(const std::string& name) {
    if (name == "P2") return projective_plane();
    if (name == "K3") return k3_surface();
    if (name.rfind("S_", 0) == 0) {
        const std::string q = name.substr(2);
        if (q.empty() || q.find_first_not_of("0123456789") != std::string::npos || q.size() > 9)
            throw InvalidArgument("bad Dolgachev surface name '" + name + "'");
        return dolgachev_surface(std::stoll(q));
    }
    throw InvalidArgument("unknown surface '" + name + "' (expected P2, K3 or S_<q>)");
}

namespace detail {

inline void emit(std::ostream& out, const io::json& j) { out << j.dump(2) << '\n'; }

inline std::string join(const std::vector<Integer>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

inline io::json matrix_json(const IntMatrix& M) {
    io::json rows = io::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        io::json row = io::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(io::integer_to_json(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void print_check(std::ostream& out, const char* label, const Check& c) {
    if (c.verdict == Verdict::not_applicable) return;
    out << label << ": " << to_string(c.verdict) << " (" << c.evidence << ")\n";
}

inline IntVector c1_for(const io::TupleDocument& d, const std::string& flag_value) {
    if (!flag_value.empty()) {
        IntVector c(parse_integer_list(flag_value, "--c1"));
        require_rank(d.rank(), c.size(), "--c1");
        return c;
    }
    if (!d.c1) throw InvalidArgument("no c1: pass --c1 or add a 'c1' field to the document");
    return *d.c1;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, constructions and non-Kaehler certificates for spin 6-manifolds", "spin6"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.set_help_all_flag("--help-all");

    std::string src, src2, c1_flag, omega_flag, e_flag, r_flag, surface_name = "P2", gallery_name;
    std::int64_t bound = 2, box = 2, q = 3, fano_box = SearchBounds{}.fano_c1_box, hyper_bound = kDefaultHyperplaneBound;
    bool bruteforce = false, reversing = false, mgt = false, nonuni = false, kod = false, skip_generic = false;

    auto* admissible = app.add_subcommand("check-admissible", "Test 4F(W) = p1(W) mod 24");
    admissible->add_option("tuple", src)->required();
    admissible->add_flag("--bruteforce", bruteforce, "Enumerate {0..23}^n (rank <= 3)");

    auto* classify = app.add_subcommand("classify", "Search for a unimodular isomorphism between two tuples");
    classify->add_option("source", src)->required();
    classify->add_option("target", src2)->required();
    classify->add_option("--bound", bound, "Largest matrix entry in absolute value")->check(CLI::Range(1, 64));
    classify->add_flag("--reverse-orientation", reversing, "Compare with the orientation-reversed target");

    auto* chern = app.add_subcommand("chern", "Chern numbers c1^3, c1c2, c3 of an almost complex structure");
    chern->add_option("tuple", src)->required();
    chern->add_option("--c1", c1_flag, "Comma-separated c1 (defaults to the document's c1)");

    auto* enumerate = app.add_subcommand("enumerate-acs", "List c1 = 2d with |d_i| <= box");
    enumerate->add_option("tuple", src)->required();
    enumerate->add_option("--box", box, "Half-width of the box")->check(CLI::Range(0, 64));

    auto* obstruct = app.add_subcommand("obstruct", "Kaehler obstructions for one almost complex structure");
    obstruct->add_option("tuple", src)->required();
    obstruct->add_option("--c1", c1_flag, "Comma-separated c1 (defaults to the document's c1)");
    obstruct->add_flag("--minimal-general-type", mgt, "Assume a minimal model of general type");
    obstruct->add_flag("--non-uniruled", nonuni, "Assume X is not uniruled");
    obstruct->add_flag("--kod012", kod, "Assume Kodaira dimension 0, 1 or 2");

    auto* construct = app.add_subcommand("construct", "Build tuple documents");
    construct->require_subcommand(1);
    auto* c_blowup = construct->add_subcommand("blowup-point", "Blow up a point");
    c_blowup->add_option("tuple", src)->required();
    auto* c_blowdown = construct->add_subcommand("blowdown", "Blow down an exceptional class");
    c_blowdown->add_option("tuple", src)->required();
    c_blowdown->add_option("--e", e_flag, "Exceptional class (defaults to the first candidate)");
    auto* c_bundle = construct->add_subcommand("p1-bundle", "P(L + O) over a surface");
    c_bundle->add_option("--surface", surface_name, "P2, K3 or S_<q>");
    c_bundle->add_option("--omega", omega_flag, "c1(L) in the surface working basis")->required();
    auto* c_dolgachev = construct->add_subcommand("dolgachev", "Dolgachev surface data S_q");
    c_dolgachev->add_option("--q", q, "Odd q >= 3");
    auto* c_gallery = construct->add_subcommand("gallery", "Built-in packages");
    c_gallery->add_option("--name", gallery_name, "Only this entry");

    auto* forge = app.add_subcommand("forge", "Forge M_r = r (p1 + omega) from a seed");
    forge->add_option("seed", src)->required();
    forge->add_option("--omega", omega_flag, "Comma-separated omega, each entry divisible by 48")->required();
    forge->add_option("--r", r_flag, "r = 1 mod 48")->required();
    forge->add_flag("--skip-genericity", skip_generic, "Do not require the genericity check to pass");

    auto* certify = app.add_subcommand("certify", "Run the six-case non-Kaehler battery");
    certify->add_option("tuple", src)->required();
    certify->add_option("--fano-box", fano_box, "Box for the Fano c1 search")->check(CLI::Range(0, 64));
    certify->add_option("--hyperplane-bound", hyper_bound, "Coefficient bound for vanishing hyperplanes")->check(CLI::Range(1, 100000));

    auto* generic = app.add_subcommand("genericity", "Check that omega avoids the special loci of a seed");
    generic->add_option("seed", src)->required();
    generic->add_option("--omega", omega_flag, "Comma-separated omega")->required();
    generic->add_option("--hyperplane-bound", hyper_bound, "Coefficient bound for vanishing hyperplanes")->check(CLI::Range(1, 100000));

    std::vector<std::string> argv_storage{"spin6"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    const bool json = format == "json";

    try {
        if (admissible->parsed()) {
            const auto d = load_source(src);
            const auto t = d.tuple();
            const bool ok = bruteforce ? is_admissible_bruteforce(t) : is_admissible(t);
            if (json)
                detail::emit(out, {{"admissible", ok}, {"method", bruteforce ? "bruteforce" : "congruence"}});
            else
                out << "admissible: " << (ok ? "yes" : "no") << '\n';
            return kSuccess;
        }

        if (classify->parsed()) {
            const auto a = load_source(src).tuple();
            const auto b = load_source(src2).tuple();
            const auto M = reversing ? isomorphic_reversing_orientation(a, b, bound) : isomorphic(a, b, bound);
            if (json) {
                io::json j = {{"isomorphic", M.has_value()}, {"bound", bound}, {"reverse_orientation", reversing}};
                j["matrix"] = M ? detail::matrix_json(M->matrix()) : io::json(nullptr);
                detail::emit(out, j);
            } else if (M) {
                out << "isomorphic: yes\nmatrix: " << M->matrix().str() << '\n';
            } else {
                out << "isomorphic: not found with entries bounded by " << bound << '\n';
            }
            return kSuccess;
        }

        if (chern->parsed()) {
            const auto d = load_source(src);
            const auto c = chern_numbers(d.tuple(), d.betti(), detail::c1_for(d, c1_flag));
            if (json)
                detail::emit(out, io::to_json(c));
            else
                out << "c1^3=" << c.c1_cubed << "\nc1c2=" << c.c1c2 << "\nc3=" << c.c3 << "\nchi_O=" << to_string(c.chi_O) << '\n';
            return kSuccess;
        }

        if (enumerate->parsed()) {
            const auto d = load_source(src);
            const auto t = d.tuple();
            io::json list = io::json::array();
            for (const auto& a : enumerate_ac_structures(t, box)) {
                const auto c = chern_numbers(t, d.betti(), a);
                if (json)
                    list.push_back({{"c1", io::integers_to_json(a.c1().values())},
                                    {"c1_cubed", io::integer_to_json(c.c1_cubed)},
                                    {"c1c2", io::integer_to_json(c.c1c2)}});
                else
                    out << "c1=" << a.c1().str() << " c1^3=" << c.c1_cubed << " c1c2=" << c.c1c2 << '\n';
            }
            if (json) detail::emit(out, list);
            return kSuccess;
        }

        if (obstruct->parsed()) {
            const auto d = load_source(src);
            const auto r = kaehler_obstructions(d.tuple(), d.betti(), detail::c1_for(d, c1_flag), Hypotheses{mgt, nonuni, kod});
            if (json) {
                detail::emit(out, io::to_json(r));
            } else {
                out << "c1^3=" << r.chern.c1_cubed << " c1c2=" << r.chern.c1c2 << " c3=" << r.chern.c3 << '\n';
                out << "h20 <= " << r.h20_bound << '\n';
                if (r.general_type_impossible) out << "general type impossible\n";
                detail::print_check(out, "riemann-roch integrality", r.rr_integrality);
                detail::print_check(out, "riemann-roch hodge range", r.rr_hodge_range);
                detail::print_check(out, "miyaoka-yau", r.miyaoka_yau);
                detail::print_check(out, "kodaira 0/1/2", r.kodaira_vanishing);
                detail::print_check(out, "general type (spin, b3 = 0)", r.general_type_spin);
                detail::print_check(out, "non-uniruled envelope", r.non_uniruled_envelope);
                out << "consistent: " << (r.consistent() ? "yes" : "no") << '\n';
            }
            return kSuccess;
        }

        if (c_blowup->parsed()) {
            detail::emit(out, io::to_json(io::document_from(blow_up_point(package_of(load_source(src))))));
            return kSuccess;
        }

        if (c_blowdown->parsed()) {
            const auto pkg = package_of(load_source(src));
            IntVector e;
            if (!e_flag.empty()) {
                e = IntVector(parse_integer_list(e_flag, "--e"));
            } else {
                const auto cands = blow_down_candidates(pkg.tuple());
                auto it = std::find_if(cands.begin(), cands.end(), [&](const IntVector& v) {
                    return !pkg.c1() || eval_linear(exceptional_coordinate(pkg.tuple(), v), *pkg.c1()) == -2;
                });
                if (it == cands.end()) throw InvalidArgument("no exceptional class found in the search box");
                e = *it;
            }
            detail::emit(out, io::to_json(io::document_from(blow_down(pkg, e))));
            return kSuccess;
        }

        if (c_bundle->parsed()) {
            const auto S = surface_named(surface_name);
            detail::emit(out, io::to_json(io::document_from(p1_bundle(S, IntVector(parse_integer_list(omega_flag, "--omega"))))));
            return kSuccess;
        }

        if (c_dolgachev->parsed()) {
            detail::emit(out, io::to_json(dolgachev_surface(q)));
            return kSuccess;
        }

        if (c_gallery->parsed()) {
            if (!gallery_name.empty()) {
                auto pkg = gallery_entry(gallery_name);
                if (!pkg) throw io::DocumentError("unknown gallery entry '" + gallery_name + "'");
                detail::emit(out, io::to_json(io::document_from(*pkg)));
                return kSuccess;
            }
            io::json all = io::json::array();
            for (const auto& p : gallery()) all.push_back(io::to_json(io::document_from(p)));
            detail::emit(out, all);
            return kSuccess;
        }

        if (forge->parsed()) {
            const auto d = load_source(src);
            const auto seed = d.tuple();
            const LinearForm omega(parse_integer_list(omega_flag, "--omega"));
            const auto r_list = parse_integer_list(r_flag, "--r");
            if (r_list.size() != 1) throw InvalidArgument("--r takes a single integer");
            if (!skip_generic) {
                const auto rep = genericity_check(seed, omega);
                if (!rep.accepted()) {
                    for (const auto& c : rep.conditions)
                        if (!c.holds)
                            throw InvalidArgument("omega is not generic: p1 + omega is degenerate on " + c.kind + " " + detail::join(c.coords));
                }
            }
            auto doc = io::document_from(forge_family(seed, omega, r_list.front()), std::nullopt, d.betti());
            const std::string seed_name = d.name.value_or("seed");
            doc.name = "M_" + r_list.front().str() + "(" + seed_name + ")";
            doc.seed = seed_name;
            doc.r = r_list.front();
            detail::emit(out, io::to_json(doc));
            return kSuccess;
        }

        if (certify->parsed()) {
            const auto d = load_source(src);
            SearchBounds bounds;
            bounds.fano_c1_box = fano_box;
            bounds.hyperplane_bound = hyper_bound;
            const auto cert = certify_non_kaehler(d.tuple(), d.betti(), bounds, d.seed.value_or(d.name.value_or("")), d.r);
            if (json) {
                detail::emit(out, io::to_json(cert));
            } else {
                out << "seed: " << cert.seed_id << '\n';
                out << "r: " << (cert.r ? cert.r->str() : std::string("-")) << '\n';
                for (const auto& c : cert.cases)
                    out << to_string(c.kind) << ": " << to_string(c.status) << " [" << c.rule << "] " << c.evidence << '\n';
                out << "verdict: " << io::verdict_name(cert) << '\n';
            }
            return cert.certified() ? kSuccess : kInconclusive;
        }

        if (generic->parsed()) {
            const auto d = load_source(src);
            SearchBounds bounds;
            bounds.hyperplane_bound = hyper_bound;
            const auto rep = genericity_check(d.tuple(), LinearForm(parse_integer_list(omega_flag, "--omega")), bounds);
            if (json) {
                detail::emit(out, io::to_json(rep));
            } else {
                for (const auto& c : rep.conditions)
                    out << c.kind << ' ' << detail::join(c.coords) << ": value " << c.value << (c.holds ? " ok" : " DEGENERATE") << '\n';
                out << "accepted: " << (rep.accepted() ? "yes" : "no") << '\n';
            }
            return kSuccess;
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace spin6::cli
