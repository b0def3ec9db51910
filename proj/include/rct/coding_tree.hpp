#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rct/graph.hpp"
#include "rct/level_tree.hpp"

namespace rct {

enum class TreeKind { henson, rado, generic };

inline std::string kind_name(TreeKind k) {
    switch (k) {
        case TreeKind::henson: return "henson";
        case TreeKind::rado: return "rado";
        default: return "generic";
    }
}

inline TreeKind kind_from_name(const std::string& s) {
    if (s == "henson") return TreeKind::henson;
    if (s == "rado") return TreeKind::rado;
    if (s == "generic") return TreeKind::generic;
    throw parse_error("unknown tree kind \"" + s + "\"");
}

// A level tree with an ordered sequence of coding nodes. Indices run from
// -pseudo (pseudo-coding nodes of a K_k-free host) through the real coding
// nodes 0..real_count()-1. In spine form only the coding nodes are
// materialized; the node set is omitted.
struct CodingTree {
    LevelTree tree;
    std::vector<BitSeq> coding; // position p holds index p - pseudo
    int pseudo = 0;
    TreeKind kind = TreeKind::generic;
    int k = 0; // clique bound, Henson kind only
    bool skew = false;
    bool spine = false;

    int real_count() const { return (int)coding.size() - pseudo; }
    int min_index() const { return -pseudo; }

    const BitSeq& coding_node(int index) const {
        int p = index + pseudo;
        if (p < 0 || p >= (int)coding.size())
            throw length_error("coding index " + std::to_string(index) + " out of range");
        return coding[p];
    }

    std::optional<int> coding_index_of(const BitSeq& node) const {
        for (std::size_t p = 0; p < coding.size(); ++p)
            if (coding[p] == node) return (int)p - pseudo;
        return std::nullopt;
    }

    // Ordered graph read off the coding nodes; pseudo-coding vertices are
    // excluded unless requested. Labels carry the coding indices.
    FiniteGraph decode(bool include_pseudo = false) const {
        std::vector<BitSeq> chain;
        std::vector<int> labels;
        for (std::size_t p = include_pseudo ? 0 : (std::size_t)pseudo; p < coding.size(); ++p) {
            chain.push_back(coding[p]);
            labels.push_back((int)p - pseudo);
        }
        return decode_graph(chain, std::move(labels));
    }

    // Splitting node: both one-step branches realized at the next level.
    bool splits(const BitSeq& node) const { return tree.succ(node).size() == 2; }

    void validate() const {
        std::unordered_set<std::string> seen;
        for (const BitSeq& c : coding)
            if (!seen.insert(c.str()).second)
                throw invariant_violation("coding map not injective at \"" + c.str() + "\"");
        for (std::size_t p = 0; p + 1 < coding.size(); ++p)
            if (coding[p].size() >= coding[p + 1].size())
                throw invariant_violation("coding node lengths must increase with the index");
        if (pseudo < 0 || pseudo > (int)coding.size())
            throw invariant_violation("pseudo-coding count out of range");
        if (kind == TreeKind::henson && k < 3)
            throw invariant_violation("K_k-free kind needs k >= 3");
        if (kind != TreeKind::henson && pseudo != 0)
            throw invariant_violation("pseudo-coding nodes only occur in K_k-free hosts");
        if (!spine) {
            for (const BitSeq& c : coding)
                if (!tree.contains(c))
                    throw invariant_violation("coding node \"" + c.str() + "\" not in the tree");
        }
        if (kind == TreeKind::henson && pseudo >= 2) {
            // pseudo-coding vertices decode to a clique
            FiniteGraph g = decode(true);
            for (int i = 0; i < pseudo; ++i)
                for (int j = i + 1; j < pseudo; ++j)
                    if (!g.adjacent(i, j))
                        throw invariant_violation("pseudo-coding vertices must form a clique");
        }
        if (skew && !spine) check_skew();
    }

    // At most one critical node per level. For K_k-free hosts critical means
    // coding or splitting; the Rado tree branches everywhere, so only coding
    // nodes count as level events there.
    void check_skew() const {
        std::unordered_set<std::string> coding_set;
        for (const BitSeq& c : coding) coding_set.insert(c.str());
        for (std::size_t h = 0; h < tree.level_count(); ++h) {
            int critical = 0;
            for (const BitSeq& x : tree.at_height(h)) {
                bool is_coding = coding_set.count(x.str()) > 0;
                bool is_split = kind != TreeKind::rado && splits(x);
                if (is_coding && is_split)
                    throw invariant_violation("node \"" + x.str() +
                                              "\" is both coding and splitting in a skew tree");
                if (is_coding || is_split) ++critical;
            }
            if (critical > 1)
                throw invariant_violation("level " + std::to_string(tree.level_length(h)) +
                                          " has " + std::to_string(critical) + " critical nodes");
        }
    }
};

} // namespace rct
