// Batch front end: analyze a polytope end-to-end, inspect the curated
// 49-entry family, and run its verification suite.
#include <CLI11.hpp>
#include <json.hpp>

#include "lpk/analyze.hpp"
#include "lpk/atlas.hpp"
#include "lpk/fine.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lpk;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json qv3_json(const QV3& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(qstr(x));
    return row;
}

json v3_json(const V3& v) { return {v[0].get_si(), v[1].get_si(), v[2].get_si()}; }

int cmd_analyze(const std::string& input, const std::string& format) {
    Polytope P = polytope_from_json(read_input(input));
    std::string rep = report_json(P);
    if (format == "json") {
        std::cout << rep << "\n";
        return kExitOk;
    }
    json r = json::parse(rep);
    std::cout << "| field | value |\n|-------|-------|\n";
    for (const auto& [k, v] : r.items()) std::cout << "| " << k << " | " << v.dump() << " |\n";
    return kExitOk;
}

int cmd_fine_interior(const std::string& input) {
    Polytope P = polytope_from_json(read_input(input));
    FineData d = fine_interior_data(P);
    json out;
    out["fine_interior"] = json::parse(polytope_to_json(d.interior, false));
    out["support"] = json::array();
    if (d.interior.empty()) {
        out["canonical_closure"] = nullptr;
        out["index_m"] = nullptr;
    } else {
        for (const auto& nu : d.support) out["support"].push_back(v3_json(nu));
        out["canonical_closure"] = json::parse(polytope_to_json(canonical_closure(P), false));
        out["index_m"] = denominator_index(d.interior).get_si();
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_atlas_list(const std::string& format) {
    if (format == "json") {
        std::cout << atlas_table_json() << "\n";
    } else {
        std::cout << atlas_table_markdown();
    }
    return kExitOk;
}

int cmd_atlas_show(const std::string& id, const std::string& format) {
    const AtlasEntry& e = atlas_get(id);
    Polytope P = e.polytope();
    if (format == "json") {
        json out;
        out["id"] = e.id;
        out["class"] = std::string(1, e.cls);
        out["polytope"] = json::parse(polytope_to_json(P));
        out["lattice_points"] = e.lattice_total.get_si();
        out["picard_generic"] = e.picard.get_si();
        out["canonical_rdp"] = e.canonical_rdp;
        out["closure"] = e.closed() ? json() : json(e.closure_id);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "entry " << e.id << " (class " << e.cls << ")\n";
        std::cout << polytope_to_json(P, false) << "\n";
    }
    return kExitOk;
}

int cmd_atlas_classify(const std::string& input) {
    Polytope P = polytope_from_json(read_input(input));
    try {
        std::cout << classify(P) << "\n";
        return kExitOk;
    } catch (const std::runtime_error& err) {
        std::cerr << err.what() << "\n";
        return kExitVerify;
    }
}

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

// Full verification sweep: every entry against its recorded row, then the
// structural, degeneration, coarsening and covering checks.
std::vector<CheckResult> run_verification(const std::string& corrupt_id) {
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, detail});
    };

    for (const auto& e : load_atlas()) {
        std::string name = "entry " + e.id;
        try {
            Polytope P = e.polytope();
            Z expect_l = e.lattice_total + (e.id == corrupt_id ? 1 : 0);
            Z got_l = lattice_count(P);
            if (got_l != expect_l) {
                add(name, false, "lattice points: expected " + expect_l.get_str() +
                                     ", got " + got_l.get_str());
                continue;
            }
            char cls = classify(P);
            if (cls != e.cls) {
                add(name, false, std::string("class: expected ") + e.cls + ", got " + cls);
                continue;
            }
            Report r = analyze(P);
            if (!e.ambient.empty() && r.ambient != e.ambient) {
                add(name, false, "ambient singularities differ from the table");
                continue;
            }
            if (r.canonical_rdp != e.canonical_rdp) {
                add(name, false, "canonical-model RDPs differ from the table");
                continue;
            }
            if (r.picard != e.picard) {
                add(name, false, "generic Picard: expected " + e.picard.get_str() +
                                     ", got " + r.picard.get_str());
                continue;
            }
            if (e.closed()) {
                if (!is_canonically_closed(P)) {
                    add(name, false, "expected a canonically closed entry");
                    continue;
                }
            } else if (canonical_closure(P).verts != atlas_get(e.closure_id).polytope().verts) {
                add(name, false, "canonical closure is not entry " + e.closure_id);
                continue;
            }
            add(name, true);
        } catch (const std::exception& err) {
            add(name, false, err.what());
        }
    }

    try {
        for (const auto& check : verify_extremal_structure()) add("structure: " + check, true);
    } catch (const std::exception& err) {
        add("structure", false, err.what());
    }

    for (const char* id : {"547444", "545317", "c", "d", "e"}) {
        std::string name = std::string("degeneration split of ") + id;
        try {
            DegenerationSplit s = degeneration_split(atlas_get(id));
            Q want(atlas_get(id).cls == 'c' || atlas_get(id).cls == 'd' ||
                           atlas_get(id).cls == 'e'
                       ? 1
                       : 2);
            bool ok = s.shared_reflexive && s.k2[0] == want && s.k2[1] == want &&
                      s.sing_rank[0] == 1 && s.sing_rank[1] == 1;
            add(name, ok, ok ? "" : "shared facet or component invariants differ");
        } catch (const std::exception& err) {
            add(name, false, err.what());
        }
    }

    for (const char* id : {"c", "d", "e"}) {
        std::string name = std::string("refinement cover of ") + id;
        try {
            CoverReport r = lattice_refine_cover(atlas_get(id));
            bool ok = r.lstar == 3 && r.lstar_can == 5 && r.k2 == 4 && r.quadric;
            add(name, ok, ok ? "" : "cover invariants differ");
        } catch (const std::exception& err) {
            add(name, false, err.what());
        }
    }

    return results;
}

int cmd_atlas_verify(bool as_json, const std::string& corrupt_id) {
    auto results = run_verification(corrupt_id);
    int entries = 0, entries_ok = 0;
    bool all_ok = true;
    for (const auto& r : results) {
        if (r.name.rfind("entry ", 0) == 0) {
            entries++;
            entries_ok += r.ok;
        }
        all_ok &= r.ok;
    }
    if (as_json) {
        json out = json::array();
        for (const auto& r : results)
            out.push_back({{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r.name << " ... " << (r.ok ? "ok" : "FAIL");
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
        std::cout << entries_ok << "/" << entries << " entries verified\n";
    }
    return all_ok ? kExitOk : kExitVerify;
}

int cmd_split(const std::string& id) {
    DegenerationSplit s = degeneration_split(atlas_get(id));
    json out;
    out["half_1"] = json::parse(polytope_to_json(s.d1, false));
    out["half_2"] = json::parse(polytope_to_json(s.d2, false));
    json shared = json::array();
    for (const auto& v : s.shared.verts) shared.push_back(qv3_json(v));
    out["shared_facet"] = shared;
    out["shared_reflexive"] = s.shared_reflexive;
    out["k2"] = {qstr(s.k2[0]), qstr(s.k2[1])};
    for (int i : {0, 1})
        out["edge_singularities"].push_back(
            {{"type", "A" + s.sing_rank[i].get_str()}, {"count", s.sing_count[i].get_si()}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_cover(const std::string& id) {
    CoverReport r = lattice_refine_cover(atlas_get(id));
    json out;
    out["refined"] = json::parse(polytope_to_json(r.refined, false));
    out["interior_points"] = r.lstar.get_si();
    out["adjoint_interior_points"] = r.lstar_can.get_si();
    out["k2"] = r.k2.get_si();
    out["quadric"] = r.quadric;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_coarsen(const std::string& id, int axis) {
    Polytope P = atlas_get(id).polytope();
    std::vector<V3> drop;
    for (const auto& v : lattice_points(P))
        if (v[axis] % 2 != 0) drop.push_back(v);
    Polytope C = lattice_coarsen(P, drop, axis);
    json out;
    out["coarse"] = json::parse(polytope_to_json(C, false));
    json dropped = json::array();
    for (const auto& v : drop) dropped.push_back(v3_json(v));
    out["dropped"] = dropped;
    out["reflexive"] = is_reflexive(C);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for canonical Fano 3-topes: Fine interiors, "
                 "canonical closures and hypersurface invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input, format = "json", id;
    int axis = 0;
    unsigned seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "random seed for sampling (reproducibility)");
    app.add_option("--jobs", jobs, "worker count hint (processing is deterministic)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "md", "markdown"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a polytope");
    analyze_cmd->add_option("--input", input, "polytope JSON file ('-' for stdin)");

    auto* fine_cmd = app.add_subcommand("fine-interior",
                                        "Fine interior, support and canonical closure");
    fine_cmd->add_option("--input", input, "polytope JSON file ('-' for stdin)");

    auto* atlas_cmd = app.add_subcommand("atlas", "the curated 49-entry family");
    atlas_cmd->require_subcommand(1);
    auto* list_cmd = atlas_cmd->add_subcommand("list", "print the table of entries");
    auto* show_cmd = atlas_cmd->add_subcommand("show", "print one entry");
    show_cmd->add_option("id", id, "entry id")->required();
    auto* classify_cmd = atlas_cmd->add_subcommand("classify",
                                                   "Fine-interior class of a polytope");
    classify_cmd->add_option("--input", input, "polytope JSON file ('-' for stdin)");
    auto* verify_cmd = atlas_cmd->add_subcommand("verify", "run the verification suite");
    bool verify_json = false, verify_md = false;
    std::string corrupt_id;
    verify_cmd->add_flag("--json", verify_json, "machine-readable result array");
    verify_cmd->add_flag("--md", verify_md, "markdown-friendly line output");
    verify_cmd->add_option("--corrupt", corrupt_id, "perturb one expected row (test fixture)")
        ->group("");  // hidden

    auto* split_cmd = app.add_subcommand("split", "degeneration split of a maximal entry");
    split_cmd->add_option("id", id, "entry id")->required();
    auto* cover_cmd = app.add_subcommand("cover", "index-2 refinement cover (classes c, d, e)");
    cover_cmd->add_option("id", id, "entry id")->required();
    auto* coarsen_cmd = app.add_subcommand("coarsen", "index-2 coarsening of an entry");
    coarsen_cmd->add_option("id", id, "entry id")->required();
    coarsen_cmd->add_option("--axis", axis, "halved coordinate axis")
        ->check(CLI::Range(0, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format == "markdown") format = "md";

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input, format);
        if (fine_cmd->parsed()) return cmd_fine_interior(input);
        if (list_cmd->parsed()) return cmd_atlas_list(format);
        if (show_cmd->parsed()) return cmd_atlas_show(id, format);
        if (classify_cmd->parsed()) return cmd_atlas_classify(input);
        if (verify_cmd->parsed()) {
            bool as_json = verify_json || (!verify_md && app.count("--format") && format == "json");
            return cmd_atlas_verify(as_json, corrupt_id);
        }
        if (split_cmd->parsed()) return cmd_split(id);
        if (cover_cmd->parsed()) return cmd_cover(id);
        if (coarsen_cmd->parsed()) return cmd_coarsen(id, axis);
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
