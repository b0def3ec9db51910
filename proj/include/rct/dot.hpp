#pragma once

#include <sstream>
#include <string>
#include <unordered_map>

#include "rct/coding_tree.hpp"

namespace rct {

// Presentation-only export: one graphviz node per tree node, containment
// edges between consecutive levels, coding nodes filled black and
// pseudo-coding nodes gray.
inline std::string to_dot(const CodingTree& t) {
    if (t.spine) throw kind_mismatch("dot export needs a materialized tree");
    std::unordered_map<std::string, int> role; // 1 = coding, 2 = pseudo-coding
    for (std::size_t p = 0; p < t.coding.size(); ++p)
        role[t.coding[p].str()] = (int)p < t.pseudo ? 2 : 1;
    std::ostringstream out;
    out << "digraph tree {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    auto id = [](const BitSeq& b) { return "\"n_" + b.str() + "\""; };
    for (const BitSeq& node : t.tree.nodes()) {
        out << "  " << id(node) << " [label=\"" << node.str() << "\"";
        auto it = role.find(node.str());
        if (it != role.end()) {
            if (it->second == 1)
                out << ", style=filled, fillcolor=black, fontcolor=white";
            else
                out << ", style=filled, fillcolor=gray";
        }
        out << "];\n";
    }
    for (std::size_t h = 1; h < t.tree.level_count(); ++h) {
        std::size_t prev_len = t.tree.level_length(h - 1);
        for (const BitSeq& node : t.tree.at_height(h))
            out << "  " << id(node.prefix(prev_len)) << " -> " << id(node) << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const LevelTree& t) {
    CodingTree wrapper;
    wrapper.tree = t;
    return to_dot(wrapper);
}

} // namespace rct
