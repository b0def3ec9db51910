#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rct/coding_tree.hpp"
#include "rct/graph.hpp"
#include "rct/level_tree.hpp"
#include "rct/precliques.hpp"
#include "rct/ramsey.hpp"

namespace rct {

using json = nlohmann::json;

// Canonical text form: sorted keys (nlohmann objects are ordered maps),
// two-space indent, trailing newline, no floats anywhere.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json level_tree_to_json(const LevelTree& t) {
    json j;
    j["levels"] = t.levels();
    std::vector<std::string> nodes;
    for (const BitSeq& n : t.nodes()) nodes.push_back(n.str());
    j["nodes"] = nodes;
    return j;
}

inline LevelTree level_tree_from_json(const json& j) {
    try {
        std::vector<std::size_t> levels = j.at("levels").get<std::vector<std::size_t>>();
        std::vector<BitSeq> nodes;
        for (const auto& s : j.at("nodes")) nodes.push_back(BitSeq(s.get<std::string>()));
        return LevelTree::from_parts(std::move(nodes), std::move(levels));
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad level tree JSON: ") + e.what());
    }
}

inline json coding_tree_to_json(const CodingTree& t) {
    json j;
    json coding = json::array();
    for (std::size_t p = 0; p < t.coding.size(); ++p) {
        json entry;
        entry["index"] = (int)p - t.pseudo;
        entry["node"] = t.coding[p].str();
        coding.push_back(entry);
    }
    j["coding"] = coding;
    if (t.kind == TreeKind::henson) j["k"] = t.k;
    j["kind"] = kind_name(t.kind);
    if (t.spine) {
        j["levels"] = json::array();
        j["nodes"] = json::array();
    } else {
        j["levels"] = t.tree.levels();
        std::vector<std::string> nodes;
        for (const BitSeq& n : t.tree.nodes()) nodes.push_back(n.str());
        j["nodes"] = nodes;
    }
    j["skew"] = t.skew;
    j["spine"] = t.spine;
    return j;
}

inline CodingTree coding_tree_from_json(const json& j) {
    try {
        CodingTree t;
        t.kind = kind_from_name(j.at("kind").get<std::string>());
        t.k = t.kind == TreeKind::henson ? j.at("k").get<int>() : 0;
        t.skew = j.at("skew").get<bool>();
        t.spine = j.at("spine").get<bool>();
        int min_index = 0;
        std::vector<BitSeq> coding;
        for (const auto& entry : j.at("coding")) {
            int idx = entry.at("index").get<int>();
            if (coding.empty())
                min_index = idx;
            else if (idx != min_index + (int)coding.size())
                throw parse_error("coding indices must be contiguous and ascending");
            coding.push_back(BitSeq(entry.at("node").get<std::string>()));
        }
        t.coding = std::move(coding);
        t.pseudo = t.coding.empty() ? 0 : -min_index;
        if (!t.spine) {
            std::vector<std::size_t> levels = j.at("levels").get<std::vector<std::size_t>>();
            std::vector<BitSeq> nodes;
            for (const auto& s : j.at("nodes")) nodes.push_back(BitSeq(s.get<std::string>()));
            t.tree = LevelTree::from_parts(std::move(nodes), std::move(levels));
        }
        t.validate();
        return t;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad coding tree JSON: ") + e.what());
    }
}

inline json graph_to_json(const FiniteGraph& g, bool with_labels = false) {
    json j;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    j["order"] = g.order;
    if (with_labels) j["labels"] = g.labels;
    return j;
}

inline FiniteGraph graph_from_json(const json& j) {
    try {
        int order = j.at("order").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::vector<int> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
        return FiniteGraph::make(order, std::move(edges), std::move(labels));
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what());
    }
}

inline json witness_report_to_json(const WitnessReport& r) {
    if (r.ok) return json{{"status", "ok"}};
    json list = json::array();
    for (const PreClique& p : r.unwitnessed) {
        json e;
        e["level"] = p.level;
        e["a"] = p.a;
        e["witness"] = p.witness;
        list.push_back(e);
    }
    return json{{"unwitnessed", list}};
}

} // namespace rct
