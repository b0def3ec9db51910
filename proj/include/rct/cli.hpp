#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rct/builders.hpp"
#include "rct/dot.hpp"
#include "rct/fbc.hpp"
#include "rct/json_io.hpp"
#include "rct/ramsey.hpp"
#include "rct/types_enum.hpp"

namespace rct {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load_json(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw parse_error("cannot parse \"" + path + "\": " + e.what());
    }
}

inline void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw parse_error("cannot write \"" + out_path + "\"");
    f << text;
}

} // namespace detail

// Command-line driver. Exit status: 0 success, 1 domain findings
// (violations, counterexamples), 2 usage or input errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial laboratory for coding trees and finite Ramsey checks"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for exhaustive sweeps")
        ->envname("RCT_JOBS")
        ->check(CLI::PositiveNumber);

    // build
    auto* build = app.add_subcommand("build", "construct a coding tree prefix");
    std::string kind, out_path, format = "json";
    int k = 0, coding = 0;
    bool spine = false;
    build->add_option("--kind", kind, "sk: strong K_k-free, tk: skew K_k-free, tr: Rado")
        ->required()
        ->check(CLI::IsMember({"sk", "tk", "tr"}));
    build->add_option("--k", k, "forbidden clique size (sk/tk)");
    build->add_option("--coding", coding, "number of coding nodes")->required();
    build->add_flag("--spine", spine, "emit coding nodes only, omit the node set");
    build->add_option("--out", out_path, "output path (default: stdout)");
    build->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    // decode
    auto* decode = app.add_subcommand("decode", "graph coded by a tree's coding nodes");
    std::string tree_path;
    bool include_pseudo = false;
    decode->add_option("--tree", tree_path, "coding tree JSON")->required();
    decode->add_flag("--include-pseudo", include_pseudo, "include pseudo-coding vertices");
    decode->add_option("--out", out_path, "output path (default: stdout)");

    // check-fbc
    auto* fbc = app.add_subcommand("check-fbc", "verify the K_k-free branching criterion");
    fbc->add_option("--tree", tree_path, "coding tree JSON")->required();
    fbc->add_option("--k", k, "forbidden clique size")->required();
    fbc->add_option("--out", out_path, "output path (default: stdout)");

    // check-witness
    auto* witness = app.add_subcommand("check-witness", "verify the witnessing property");
    std::string subtree_path;
    bool new_only = false;
    witness->add_option("--tree", tree_path, "host coding tree JSON")->required();
    witness->add_option("--subtree", subtree_path,
                        "JSON object with \"nodes\" and \"coding\" bitstring arrays")
        ->required();
    witness->add_flag("--new-only", new_only, "only require witnesses where configurations first appear");
    witness->add_option("--out", out_path, "output path (default: stdout)");

    // types
    auto* types = app.add_subcommand("types", "similarity types of coding antichains");
    std::string graph_path, host_path, mode = "strong";
    int depth = 0;
    types->add_option("--graph", graph_path, "target graph JSON")->required();
    types->add_option("--host", host_path, "host coding tree JSON")->required();
    types->add_option("--mode", mode, "strong or strict")
        ->check(CLI::IsMember({"strong", "strict"}));
    types->add_option("--depth", depth, "number of coding nodes to search")->required();
    types->add_option("--out", out_path, "output path (default: stdout)");

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "finite Ramsey verification");
    int rn = 0, rk = 0, rr = 0, rm = 0;
    std::string coloring_path;
    ramsey->add_option("--n", rn, "ground set size")->required();
    ramsey->add_option("--k", rk, "subset size being colored")->required();
    ramsey->add_option("--r", rr, "number of colors")->required();
    ramsey->add_option("--m", rm, "monochromatic set size")->required();
    ramsey->add_option("--coloring", coloring_path,
                       "single-coloring mode: JSON array, one color per k-subset");
    ramsey->add_option("--out", out_path, "output path (default: stdout)");

    // sierpinski
    auto* sier = app.add_subcommand("sierpinski", "pair-color persistence sweep");
    int sdepth = 0;
    sier->add_option("--depth", sdepth, "height of the binary host")->required();
    sier->add_option("--out", out_path, "output path (default: stdout)");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "graphviz rendering of a tree");
    dot->add_option("--tree", tree_path, "coding tree JSON")->required();
    dot->add_option("--out", out_path, "output path (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("rct");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (build->parsed()) {
            CodingTree t;
            if (kind == "tr") {
                if (build->count("--k") > 0)
                    throw kind_mismatch("--k does not apply to the Rado tree");
                t = spine ? rado_spine(coding) : rado_tree(coding);
            } else {
                if (build->count("--k") == 0)
                    throw kind_mismatch("--k is required for K_k-free trees");
                if (kind == "sk")
                    t = spine ? strong_kfree_spine(k, coding) : strong_kfree_tree(k, coding);
                else
                    t = spine ? skew_kfree_spine(k, coding) : skew_kfree_tree(k, coding);
            }
            t.validate();
            std::string text = format == "dot" ? to_dot(t) : canonical_dump(coding_tree_to_json(t));
            detail::write_output(text, out_path, out);
            return 0;
        }
        if (decode->parsed()) {
            CodingTree t = coding_tree_from_json(detail::load_json(tree_path));
            FiniteGraph g = t.decode(include_pseudo);
            detail::write_output(canonical_dump(graph_to_json(g, include_pseudo)), out_path, out);
            return 0;
        }
        if (fbc->parsed()) {
            CodingTree t = coding_tree_from_json(detail::load_json(tree_path));
            FbcReport report = check_kfbc(t, k);
            json j;
            if (report.ok) {
                j["status"] = "ok";
            } else {
                j["status"] = "violations";
                json v = json::array();
                for (const FbcViolation& fv : report.violations)
                    v.push_back(json{{"node", fv.node.str()}, {"reason", fv.reason}});
                j["violations"] = v;
            }
            detail::write_output(canonical_dump(j), out_path, out);
            return report.ok ? 0 : 1;
        }
        if (witness->parsed()) {
            CodingTree t = coding_tree_from_json(detail::load_json(tree_path));
            json sj = detail::load_json(subtree_path);
            std::vector<BitSeq> nodes, coding_nodes;
            for (const auto& s : sj.at("nodes")) nodes.push_back(BitSeq(s.get<std::string>()));
            for (const auto& s : sj.at("coding"))
                coding_nodes.push_back(BitSeq(s.get<std::string>()));
            WitnessReport report = check_witnessing(t, nodes, coding_nodes, new_only);
            detail::write_output(canonical_dump(witness_report_to_json(report)), out_path, out);
            return report.ok ? 0 : 1;
        }
        if (types->parsed()) {
            FiniteGraph g = graph_from_json(detail::load_json(graph_path));
            CodingTree host = coding_tree_from_json(detail::load_json(host_path));
            SimMode sim_mode = mode == "strict" ? SimMode::strict : SimMode::strong;
            TypeEnumeration e = enumerate_types(g, host, sim_mode, depth);
            json j;
            j["count"] = e.count;
            j["saturated"] = e.saturated;
            json tys = json::array();
            for (const SimilarityType& ty : e.types) tys.push_back(ty.key());
            j["types"] = tys;
            detail::write_output(canonical_dump(j), out_path, out);
            return 0;
        }
        if (ramsey->parsed()) {
            json j;
            j["n"] = rn;
            j["k"] = rk;
            j["r"] = rr;
            j["m"] = rm;
            bool holds;
            if (!coloring_path.empty()) {
                std::vector<int> coloring =
                    detail::load_json(coloring_path).get<std::vector<int>>();
                holds = coloring_has_mono_subset(rn, rk, rm, coloring);
                j["exhaustive"] = false;
                j["holds"] = holds;
            } else {
                RamseyResult res = finite_ramsey_check(rn, rk, rr, rm, std::uint64_t(1) << 24, jobs);
                holds = res.holds;
                j["exhaustive"] = res.exhaustive;
                j["colorings_checked"] = res.colorings_checked;
                j["holds"] = res.holds;
                if (res.counterexample) j["counterexample"] = *res.counterexample;
            }
            detail::write_output(canonical_dump(j), out_path, out);
            return holds ? 0 : 1;
        }
        if (sier->parsed()) {
            PersistenceResult res = verify_sierpinski_persistence(sdepth);
            json j;
            j["depth"] = sdepth;
            j["holds"] = res.holds;
            j["subtrees_checked"] = res.subtrees_checked;
            if (res.counterexample) {
                json sets = json::array();
                for (const auto& lv : res.counterexample->level_sets) {
                    json one = json::array();
                    for (const BitSeq& b : lv) one.push_back(b.str());
                    sets.push_back(one);
                }
                j["counterexample"] = json{{"level_map", res.counterexample->level_map},
                                           {"level_sets", sets}};
            }
            detail::write_output(canonical_dump(j), out_path, out);
            return res.holds ? 0 : 1;
        }
        if (dot->parsed()) {
            CodingTree t = coding_tree_from_json(detail::load_json(tree_path));
            detail::write_output(to_dot(t), out_path, out);
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace rct
