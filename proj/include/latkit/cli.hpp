// Command implementations behind the `latkit` binary.  Factored into a
// header so the test suite can drive the exact CLI surface without spawning
// processes; tools/latkit.cpp is a thin wrapper around run_cli().
#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latkit/builders.hpp"
#include "latkit/congruence.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/identities.hpp"
#include "latkit/io.hpp"
#include "latkit/kd.hpp"
#include "latkit/refute.hpp"
#include "latkit/seeds.hpp"
#include "latkit/verify.hpp"

namespace latkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

inline std::uint64_t budget_from_env() {
    if (const char* s = std::getenv("LATKIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultEvalBudget;
}

namespace detail {

inline std::string assignment_to_string(const Lattice& L, const Assignment& a) {
    std::string s;
    for (const auto& [var, val] : a) {
        if (!s.empty()) s += ", ";
        s += var + "=" + L.label(val);
    }
    return s;
}

inline nlohmann::ordered_json assignment_to_json(const Lattice& L, const Assignment& a) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [var, val] : a) j[var] = L.label(val);
    return j;
}

inline ElemSet parse_subset(const Lattice& L, const std::string& csv) {
    ElemSet out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) out.add(L.index_of(cur));
    }
    return out;
}

struct CheckLine {
    std::string name;
    bool valid;
    std::string witness;  // empty when valid
};

inline int emit_checks(const Lattice& L, const std::vector<CheckLine>& checks, bool json,
                       std::ostream& out) {
    bool all_ok = true;
    if (json) {
        nlohmann::ordered_json j;
        j["lattice"] = L.name();
        j["results"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json r;
            r["check"] = c.name;
            r["valid"] = c.valid;
            if (!c.valid) r["counterexample"] = c.witness;
            j["results"].push_back(r);
            all_ok = all_ok && c.valid;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            out << c.name << ": " << (c.valid ? "VALID" : "INVALID");
            if (!c.valid && !c.witness.empty()) out << " (counterexample " << c.witness << ")";
            out << "\n";
            all_ok = all_ok && c.valid;
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

struct Options {
    // common
    std::string file;
    bool json = false;
    int jobs = 1;
    // props
    int ndistr = 0;
    bool modular = false, distributive = false, jsd = false, sentence = false;
    int sdj = -1;
    // covers
    std::string element;
    bool want_minimal = false, want_tight = false, want_irredundant = false;
    std::string refine_csv;
    // congruences
    bool si = false;
    std::string principal_csv;
    // seeds
    std::string subset_csv;
    bool pre = false, quasi = false, seed = false, strong = false;
    // kd
    std::string dist_file;
    // enumerate
    int size = 0;
    std::string filter;
    bool count_only = false;
    std::string emit_dir;
    bool force = false;
    // refute
    std::string lhs, rhs;
    int refute_ndistr = -1;
    int max_size = 0;
    // verify
    int verify_max_size = 0;
    unsigned rng_seed = 0;
};

// ---------------------------------------------------------------------------

inline int cmd_validate(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    if (o.json) {
        nlohmann::ordered_json j;
        j["name"] = L.name();
        j["elements"] = L.size();
        j["bottom"] = L.label(L.bottom());
        j["top"] = L.label(L.top());
        j["join_irreducibles"] = set_to_string(L, L.join_irreducibles());
        j["atoms"] = set_to_string(L, L.atoms());
        j["valid"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << "valid: " << L.name() << ": " << L.size() << " elements, bottom "
            << L.label(L.bottom()) << ", top " << L.label(L.top()) << ", join-irreducibles {"
            << set_to_string(L, L.join_irreducibles()) << "}, atoms {"
            << set_to_string(L, L.atoms()) << "}\n";
    }
    return kExitOk;
}

inline int cmd_props(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    const std::uint64_t budget = budget_from_env();
    std::vector<detail::CheckLine> checks;
    auto push = [&](const std::string& name, const Verdict& v) {
        checks.push_back({name, v.valid,
                          v.valid ? "" : detail::assignment_to_string(L, v.counterexample)});
    };
    if (o.ndistr > 0)
        push("n-distributive(" + std::to_string(o.ndistr) + ")",
             is_n_distributive(L, o.ndistr, budget, o.jobs));
    if (o.modular) push("modular", is_modular(L, budget, o.jobs));
    if (o.distributive) push("distributive", is_distributive(L, budget, o.jobs));
    if (o.jsd) push("join-semidistributive", is_join_semidistributive(L, budget));
    if (o.sdj >= 0) push("sdj(" + std::to_string(o.sdj) + ")", holds_sdj(L, o.sdj, budget, o.jobs));
    if (o.sentence) push("sentence", holds_sentence_1storder(L, budget));

    if (checks.empty()) {
        // no flags: print a summary only
        Options v = o;
        return cmd_validate(v, out);
    }
    return detail::emit_checks(L, checks, o.json, out);
}

inline int cmd_covers(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    const int p = L.index_of(o.element);
    if (!o.refine_csv.empty()) {
        ElemSet E = detail::parse_subset(L, o.refine_csv);
        Cover given = classify_cover(L, p, E);
        if (given.kind == CoverKind::none)
            throw NotACoverError("'" + L.label(p) + "' is not covered by {" +
                                 set_to_string(L, E) + "}");
        ElemSet t = refine_to_tight(L, p, E);
        ElemSet m = refine_to_minimal(L, p, E);
        if (o.json) {
            nlohmann::ordered_json j;
            j["element"] = L.label(p);
            j["given"] = set_to_string(L, E);
            j["kind"] = cover_kind_name(given.kind);
            j["tight"] = set_to_string(L, t);
            j["minimal"] = set_to_string(L, m);
            out << j.dump(2) << "\n";
        } else {
            out << cover_report_line(L, given) << "\n";
            out << cover_report_line(L, classify_cover(L, p, t)) << "\n";
            out << cover_report_line(L, classify_cover(L, p, m)) << "\n";
        }
        return kExitOk;
    }
    std::vector<ElemSet> list;
    std::string kind = "minimal";
    if (o.want_irredundant) {
        list = irredundant_covers(L, p);
        kind = "irredundant";
    } else if (o.want_tight) {
        list = tight_covers(L, p);
        kind = "tight";
    } else {
        list = minimal_join_covers(L, p);
    }
    if (o.json) {
        nlohmann::ordered_json j;
        j["element"] = L.label(p);
        j["class"] = kind;
        j["covers"] = nlohmann::ordered_json::array();
        for (ElemSet E : list) j["covers"].push_back(set_to_string(L, E));
        out << j.dump(2) << "\n";
    } else {
        for (ElemSet E : list) out << cover_report_line(L, classify_cover(L, p, E)) << "\n";
    }
    return kExitOk;
}

inline int cmd_congruences(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    if (!o.principal_csv.empty()) {
        ElemSet pair = detail::parse_subset(L, o.principal_csv);
        if (pair.size() < 1 || pair.size() > 2)
            throw InputError("--principal needs two element labels");
        const int x = pair.min();
        const int y = pair.without(x).empty() ? x : pair.without(x).min();
        Congruence c = principal_congruence(L, x, y);
        if (o.json) {
            nlohmann::ordered_json j;
            j["principal"] = {L.label(x), L.label(y)};
            j["congruence"] = congruence_to_string(L, c);
            j["blocks"] = c.block_count();
            out << j.dump(2) << "\n";
        } else {
            out << "con(" << L.label(x) << "," << L.label(y)
                << ") = " << congruence_to_string(L, c) << "\n";
        }
        return kExitOk;
    }
    if (o.si) {
        SIVerdict v = is_subdirectly_irreducible(L);
        if (o.json) {
            nlohmann::ordered_json j;
            j["subdirectly_irreducible"] = v.subdirectly_irreducible;
            if (v.subdirectly_irreducible)
                j["monolith"] = congruence_to_string(L, v.monolith);
            out << j.dump(2) << "\n";
        } else if (v.subdirectly_irreducible) {
            out << "subdirectly irreducible: monolith " << congruence_to_string(L, v.monolith)
                << "\n";
        } else {
            out << "not subdirectly irreducible\n";
        }
        return v.subdirectly_irreducible ? kExitOk : kExitCheckFailed;
    }
    auto all = all_congruences(L);
    if (o.json) {
        nlohmann::ordered_json j;
        j["count"] = all.size();
        j["congruences"] = nlohmann::ordered_json::array();
        for (const auto& c : all) j["congruences"].push_back(congruence_to_string(L, c));
        out << j.dump(2) << "\n";
    } else {
        out << all.size() << " congruences\n";
        for (const auto& c : all) out << congruence_to_string(L, c) << "\n";
    }
    return kExitOk;
}

inline int cmd_seeds(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    std::vector<detail::CheckLine> checks;
    auto push = [&](const std::string& name, const SeedVerdict& v) {
        std::string witness;
        if (!v.holds) {
            witness = v.reason;
            if (v.p >= 0 && !v.cover.empty())
                witness += ": p = " + L.label(v.p) + ", cover {" + set_to_string(L, v.cover) + "}";
            else if (v.p >= 0)
                witness += ": element " + L.label(v.p);
        }
        checks.push_back({name, v.holds, witness});
    };
    if (!o.subset_csv.empty()) {
        ElemSet sigma = detail::parse_subset(L, o.subset_csv);
        const bool all = !o.pre && !o.quasi && !o.seed;
        if (o.pre || all) push("pre-seed", is_pre_seed(L, sigma));
        if (o.quasi || all) push("quasi-seed", is_quasi_seed(L, sigma));
        if (o.seed || all) push("seed", is_seed(L, sigma));
    }
    if (o.strong) push("strongly-spatial", is_strongly_spatial(L));
    if (checks.empty()) throw InputError("seeds: pass --subset a,b,c and/or --strong");
    return detail::emit_checks(L, checks, o.json, out);
}

inline int cmd_kd(const Options& o, std::ostream& out) {
    Lattice D = read_lattice_file(o.dist_file);
    require_bounded_distributive(D);
    QuadLattice K = build_KD(D);
    out << write_lattice_json(K.L);
    return kExitOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.size < 1) throw InputError("enumerate: pass --size N");
    const int limit = o.force ? kEnumerateMaxSize : 7;
    if (o.size > limit)
        throw SizeGuardError("enumerate: size " + std::to_string(o.size) +
                             " needs --force (hard bound " +
                             std::to_string(kEnumerateMaxSize) + ")");
    std::optional<LatticePredicate> pred;
    std::string pred_desc;
    if (!o.filter.empty()) {
        std::string name = o.filter;
        int param = -1;
        if (auto colon = o.filter.find(':'); colon != std::string::npos) {
            name = o.filter.substr(0, colon);
            param = std::atoi(o.filter.c_str() + colon + 1);
        }
        pred = make_predicate(name, param);
        pred_desc = o.filter;
    }
    std::uint64_t kept = 0;
    if (!o.emit_dir.empty()) std::filesystem::create_directories(o.emit_dir);
    enumerate_lattices(o.size, [&](const Lattice& L) {
        if (pred && !(*pred)(L)) return true;
        ++kept;
        if (!o.emit_dir.empty()) {
            write_lattice_file(L, o.emit_dir + "/" + L.name() + ".json");
        } else if (!o.count_only) {
            if (o.json) {
                out << write_lattice_json(L);
            } else {
                std::string covers;
                for (auto [lo, hi] : L.cover_pairs()) {
                    if (!covers.empty()) covers += " ";
                    covers += L.label(lo) + "<" + L.label(hi);
                }
                out << L.name() << ": " << covers << "\n";
            }
        }
        return true;
    });
    if (o.count_only || !o.emit_dir.empty()) {
        out << kept << (pred_desc.empty() ? std::string() : " [" + pred_desc + "]") << "\n";
    }
    return kExitOk;
}

inline int cmd_refute(const Options& o, std::ostream& out) {
    if (o.max_size < 1) throw InputError("refute: pass --max-size K");
    Term lhs = parse_term(o.lhs);
    Term rhs = parse_term(o.rhs);
    std::optional<int> nd;
    if (o.refute_ndistr >= 0) nd = o.refute_ndistr;
    RefuteResult r = refute(lhs, rhs, nd, o.max_size, budget_from_env(), o.jobs);
    if (o.json) {
        nlohmann::ordered_json j;
        j["lhs"] = lhs.to_string();
        j["rhs"] = rhs.to_string();
        j["found"] = r.found;
        if (r.found) {
            j["lattice"] = nlohmann::ordered_json::parse(write_lattice_json(*r.lattice));
            j["assignment"] = detail::assignment_to_json(*r.lattice, r.counterexample);
        } else {
            j["max_size_searched"] = r.max_size_searched;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (r.found) {
        out << "counterexample in " << r.lattice->name() << ":\n";
        out << write_lattice_json(*r.lattice);
        out << "assignment: " << detail::assignment_to_string(*r.lattice, r.counterexample)
            << "\n";
    } else {
        out << "exhausted: no counterexample up to size " << r.max_size_searched << "\n";
    }
    return kExitOk;
}

inline int cmd_dot(const Options& o, std::ostream& out) {
    Lattice L = read_lattice_file(o.file);
    out << to_dot(L);
    return kExitOk;
}

inline int cmd_verify_paper(const Options& o, std::ostream& out) {
    verify::VerifyOptions vo;
    vo.max_size = o.verify_max_size;
    vo.rng_seed = o.rng_seed;
    vo.budget = budget_from_env();
    vo.jobs = o.jobs;
    verify::VerificationReport report = verify::run_verification(vo);
    if (o.json) {
        nlohmann::ordered_json j;
        j["claims"] = nlohmann::ordered_json::array();
        for (const auto& c : report.claims) {
            nlohmann::ordered_json cj;
            cj["id"] = c.id;
            cj["claim"] = c.claim;
            cj["status"] = c.status;
            cj["details"] = c.details;
            j["claims"].push_back(cj);
        }
        j["pass"] = report.all_pass();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : report.claims) {
            out << "[" << (c.id < 10 ? " " : "") << c.id << "] "
                << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "  "
                << c.claim << "\n";
            if (c.status == "fail") out << "      " << c.details << "\n";
        }
        out << (report.all_pass() ? "all claims pass" : "SOME CLAIMS FAILED") << "\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"latkit: exact computations on finite lattices"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", [&o](const std::vector<std::string>& v) {
            if (v[0] == "json") o.json = true;
            else if (v[0] != "text") throw CLI::ValidationError("--format must be text or json");
            return true;
        }, "output format: text (default) or json");
    };

    auto* validate = app.add_subcommand("validate", "read and validate a lattice file");
    validate->add_option("file", o.file)->required();
    add_format(validate);

    auto* props = app.add_subcommand("props", "decide identities and quasi-identities");
    props->add_option("file", o.file)->required();
    props->add_option("--ndistr", o.ndistr, "check n-distributivity for this n");
    props->add_flag("--modular", o.modular);
    props->add_flag("--distributive", o.distributive);
    props->add_flag("--jsd", o.jsd, "check join-semidistributivity");
    props->add_option("--sdj", o.sdj, "check the SD-join identity for this n");
    props->add_flag("--sentence", o.sentence,
                    "check: x|y|z < t1 < t2 implies (x|y)&z = (x&z)|(y&z)");
    props->add_option("--jobs", o.jobs);
    add_format(props);

    auto* covers = app.add_subcommand("covers", "join-cover calculus for one element");
    covers->add_option("file", o.file)->required();
    covers->add_option("--element", o.element)->required();
    covers->add_flag("--minimal", o.want_minimal);
    covers->add_flag("--tight", o.want_tight);
    covers->add_flag("--irredundant", o.want_irredundant);
    covers->add_option("--refine", o.refine_csv, "refine this cover (comma-separated labels)");
    add_format(covers);

    auto* cong = app.add_subcommand("congruences", "congruence lattice computations");
    cong->add_option("file", o.file)->required();
    cong->add_flag("--si", o.si, "decide subdirect irreducibility");
    cong->add_option("--principal", o.principal_csv, "principal congruence of a pair x,y");
    add_format(cong);

    auto* seeds = app.add_subcommand("seeds", "seed hierarchy checks");
    seeds->add_option("file", o.file)->required();
    seeds->add_option("--subset", o.subset_csv, "comma-separated element labels");
    seeds->add_flag("--pre", o.pre);
    seeds->add_flag("--quasi", o.quasi);
    seeds->add_flag("--seed", o.seed);
    seeds->add_flag("--strong", o.strong, "check strong spatiality of the whole lattice");
    add_format(seeds);

    auto* kd = app.add_subcommand("kd", "build K(D) from a bounded distributive lattice");
    kd->add_option("--dist", o.dist_file, "lattice file for D")->required();

    auto* en = app.add_subcommand("enumerate", "enumerate lattices up to isomorphism");
    en->add_option("--size", o.size)->required();
    en->add_option("--filter", o.filter, "predicate, e.g. modular or n-distributive:2");
    en->add_flag("--count-only", o.count_only);
    en->add_option("--emit-dir", o.emit_dir);
    en->add_flag("--force", o.force, "allow size 8");
    add_format(en);

    auto* ref = app.add_subcommand("refute", "search the catalog for an identity counterexample");
    ref->add_option("--lhs", o.lhs)->required();
    ref->add_option("--rhs", o.rhs)->required();
    ref->add_option("--ndistr", o.refute_ndistr, "restrict to n-distributive lattices");
    ref->add_option("--max-size", o.max_size)->required();
    ref->add_option("--jobs", o.jobs);
    add_format(ref);

    auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
    dot->add_option("file", o.file)->required();

    auto* vp = app.add_subcommand("verify-paper", "run the full claim suite");
    vp->add_option("--max-size", o.verify_max_size, "clamp catalog sizes (quick runs)");
    vp->add_option("--rng-seed", o.rng_seed);
    vp->add_option("--jobs", o.jobs);
    add_format(vp);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        const int code = app.exit(e, dummy, dummy);
        (out << dummy.str()).flush();
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(o, out);
        if (app.got_subcommand(props)) return cmd_props(o, out);
        if (app.got_subcommand(covers)) return cmd_covers(o, out);
        if (app.got_subcommand(cong)) return cmd_congruences(o, out);
        if (app.got_subcommand(seeds)) return cmd_seeds(o, out);
        if (app.got_subcommand(kd)) return cmd_kd(o, out);
        if (app.got_subcommand(en)) return cmd_enumerate(o, out);
        if (app.got_subcommand(ref)) return cmd_refute(o, out);
        if (app.got_subcommand(dot)) return cmd_dot(o, out);
        if (app.got_subcommand(vp)) return cmd_verify_paper(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace latkit::cli
