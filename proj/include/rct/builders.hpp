#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rct/coding_tree.hpp"
#include "rct/errors.hpp"

namespace rct {

namespace detail {

inline bool mask_clique_extend(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                               int from, int limit, int need) {
    if (need == 0) return true;
    for (int v = from; v < limit; ++v) {
        if (!((allowed >> v) & 1)) continue;
        if (mask_clique_extend(adj, allowed & adj[v], v + 1, limit, need - 1)) return true;
    }
    return false;
}

// Level-by-level growth of the K_k-free branching tree with one coding
// placement per level. A node at level L is identified with its bit pattern
// over positions 0..L-1; since every position carries a coding node, the
// pattern is the node's passing-number profile, and a node exists exactly
// when its 1-set spans no (k-1)-clique.
//
// Placement schedule: positions 0..k-3 are the pseudo-coding chain of
// all-ones prefixes, position k-2 is the first real vertex, which completes
// the pseudo clique to size k-1, and later vertices walk all passing
// patterns over each prefix of earlier real vertices in descending
// binary-counter order, skipping patterns the clique bound forbids. Every
// admissible pattern over every prefix is eventually realized.
struct Growth {
    int k = 0;
    int pseudo = 0;
    int total = 0; // placements = pseudo + real coding nodes
    std::vector<std::uint64_t> coding_mask;          // per placement
    std::vector<std::uint64_t> adj;                  // adjacency over placements
    std::vector<std::vector<std::uint64_t>> levels;  // node patterns per level, lex order
    std::vector<std::vector<std::uint64_t>> splits;  // splitting patterns per transition

    bool clique_in(std::uint64_t vertex_mask, int size) const {
        if (size <= 0) return true;
        return mask_clique_extend(adj, vertex_mask, 0, total, size);
    }

    static Growth run(int k, int n_coding, std::size_t node_budget = 5'000'000) {
        if (k < 3) throw kind_mismatch("K_k-free construction needs k >= 3");
        if (n_coding < 0) throw length_error("coding node count must be nonnegative");
        Growth g;
        g.k = k;
        g.pseudo = k - 2;
        g.total = g.pseudo + n_coding;
        if (g.total > 62) throw budget_exceeded("placement count exceeds 62");
        g.adj.assign(std::max(g.total, 1), 0);
        g.levels.push_back({0});
        int b = 1;
        std::int64_t w = 1; // descending counter within the current block
        std::size_t nodes_seen = 1;
        for (int p = 0; p < g.total; ++p) {
            std::uint64_t mask;
            if (p <= g.pseudo) {
                mask = (std::uint64_t(1) << p) - 1;
            } else {
                for (;;) {
                    if (w < 0) {
                        ++b;
                        w = (std::int64_t(1) << b) - 1;
                    }
                    if (b > p - g.pseudo)
                        throw invariant_violation("pattern block outran the placements");
                    std::uint64_t m = 0;
                    for (int i = 0; i < b; ++i)
                        if ((w >> (b - 1 - i)) & 1) m |= std::uint64_t(1) << (g.pseudo + i);
                    --w;
                    if (!g.clique_in(m, k - 1)) {
                        mask = m;
                        break;
                    }
                }
            }
            g.coding_mask.push_back(mask);
            for (int i = 0; i < p; ++i)
                if ((mask >> i) & 1) {
                    g.adj[i] |= std::uint64_t(1) << p;
                    g.adj[p] |= std::uint64_t(1) << i;
                }
            if (p + 1 < g.total) {
                std::vector<std::uint64_t> next;
                std::vector<std::uint64_t> split_here;
                next.reserve(g.levels.back().size() * 2);
                for (std::uint64_t x : g.levels.back()) {
                    next.push_back(x);
                    std::uint64_t y = x | (std::uint64_t(1) << p);
                    if (!g.clique_in(y, k - 1)) {
                        next.push_back(y);
                        split_here.push_back(x);
                    }
                }
                nodes_seen += next.size();
                if (nodes_seen > node_budget)
                    throw budget_exceeded("tree growth exceeds the node budget");
                g.levels.push_back(std::move(next));
                g.splits.push_back(std::move(split_here));
            }
        }
        return g;
    }
};

} // namespace detail

// Strong K_k-free tree prefix: k-FBC branching with k-2 pseudo-coding nodes
// followed by n real coding nodes, one per level.
inline CodingTree strong_kfree_tree(int k, int n_coding) {
    detail::Growth g = detail::Growth::run(k, n_coding);
    std::vector<BitSeq> nodes;
    std::vector<std::size_t> levels;
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
        levels.push_back(l);
        for (std::uint64_t m : g.levels[l]) nodes.push_back(BitSeq::from_mask(m, l));
    }
    CodingTree t;
    t.tree = LevelTree::from_parts(std::move(nodes), std::move(levels));
    for (int p = 0; p < g.total; ++p) t.coding.push_back(BitSeq::from_mask(g.coding_mask[p], p));
    t.pseudo = g.pseudo;
    t.kind = TreeKind::henson;
    t.k = k;
    t.skew = false;
    t.spine = false;
    return t;
}

// Spine form: coding nodes of the strong K_k-free tree only.
inline CodingTree strong_kfree_spine(int k, int n_coding) {
    detail::Growth g = detail::Growth::run(k, n_coding);
    CodingTree t;
    for (int p = 0; p < g.total; ++p) t.coding.push_back(BitSeq::from_mask(g.coding_mask[p], p));
    t.pseudo = g.pseudo;
    t.kind = TreeKind::henson;
    t.k = k;
    t.skew = false;
    t.spine = true;
    return t;
}

namespace detail {

// The skew stretch interleaves one critical event per level: the splitting
// nodes of each transition in breadth-first order, then the scheduled coding
// node. Passing numbers at a coding node are realized by the single-child
// crossing right after its designation, so the designation must follow the
// splits of its own transition.
struct SkewEvent {
    bool desig = false;
    std::uint64_t splitter = 0;
    int q = 0;
    int placement = 0;
};

inline std::vector<SkewEvent> skew_events(const Growth& g) {
    std::vector<SkewEvent> ev;
    for (int q = 0; q < g.total; ++q) {
        if (q + 1 < g.total)
            for (std::uint64_t u : g.splits[q]) ev.push_back({false, u, q, 0});
        ev.push_back({true, 0, q, q});
    }
    return ev;
}

// Bit contributed by an event to the image of the node identified by `mask`.
inline int skew_event_bit(const SkewEvent& e, std::uint64_t mask) {
    std::uint64_t prefix = mask & ((std::uint64_t(1) << e.q) - 1);
    if (!e.desig && prefix != e.splitter) return 0;
    return int((mask >> e.q) & 1);
}

} // namespace detail

// Coding nodes of the skew K_k-free tree, without materializing the tree.
inline std::vector<BitSeq> skew_kfree_coding(int k, int n_coding) {
    detail::Growth g = detail::Growth::run(k, n_coding);
    std::vector<detail::SkewEvent> events = detail::skew_events(g);
    std::vector<BitSeq> out;
    for (int p = 0; p < g.total; ++p) {
        std::string bits;
        for (const detail::SkewEvent& e : events) {
            if (e.desig && e.placement == p) break;
            bits.push_back(detail::skew_event_bit(e, g.coding_mask[p]) ? '1' : '0');
        }
        out.push_back(BitSeq(std::move(bits)));
    }
    return out;
}

// Skew K_k-free tree prefix with every node materialized. Same decode as the
// strong tree for equal parameters.
inline CodingTree skew_kfree_tree(int k, int n_coding, std::size_t node_budget = 5'000'000) {
    detail::Growth g = detail::Growth::run(k, n_coding);
    struct Entry {
        std::string bits;
        std::uint64_t sid;
        int sid_level;
    };
    std::vector<Entry> frontier{{std::string(), 0, 0}};
    std::vector<std::vector<BitSeq>> levels_out;
    auto snapshot = [&] {
        std::vector<BitSeq> lv;
        lv.reserve(frontier.size());
        for (const Entry& e : frontier) lv.push_back(BitSeq(e.bits));
        levels_out.push_back(std::move(lv));
    };
    snapshot();
    std::vector<std::string> coding_out(g.total);
    std::size_t nodes_seen = 1;
    for (int q = 0; q < g.total; ++q) {
        if (q + 1 < g.total) {
            for (std::uint64_t u : g.splits[q]) {
                std::vector<Entry> next;
                next.reserve(frontier.size() + 1);
                for (Entry& e : frontier) {
                    if (e.sid_level == q && e.sid == u) {
                        next.push_back({e.bits + '0', u, q + 1});
                        next.push_back({e.bits + '1', u | (std::uint64_t(1) << q), q + 1});
                    } else {
                        next.push_back({e.bits + '0', e.sid, e.sid_level});
                    }
                }
                frontier = std::move(next);
                nodes_seen += frontier.size();
                if (nodes_seen > node_budget)
                    throw budget_exceeded(
                        "skew tree exceeds the node budget; use the spine form");
                snapshot();
            }
        }
        for (Entry& e : frontier)
            if (e.sid_level == q) e.sid_level = q + 1; // passive 0-children
        bool found = false;
        for (Entry& e : frontier)
            if (e.sid == g.coding_mask[q]) {
                coding_out[q] = e.bits;
                found = true;
                break;
            }
        if (!found) throw invariant_violation("scheduled coding node missing from the frontier");
        if (q + 1 < g.total) {
            for (Entry& e : frontier) e.bits.push_back(((e.sid >> q) & 1) ? '1' : '0');
            nodes_seen += frontier.size();
            if (nodes_seen > node_budget)
                throw budget_exceeded("skew tree exceeds the node budget; use the spine form");
            snapshot();
        }
    }
    std::vector<BitSeq> nodes;
    std::vector<std::size_t> levels;
    for (std::size_t l = 0; l < levels_out.size(); ++l) {
        levels.push_back(l);
        for (BitSeq& b : levels_out[l]) nodes.push_back(std::move(b));
    }
    CodingTree t;
    t.tree = LevelTree::from_parts(std::move(nodes), std::move(levels));
    for (std::string& s : coding_out) t.coding.push_back(BitSeq(std::move(s)));
    t.pseudo = g.pseudo;
    t.kind = TreeKind::henson;
    t.k = k;
    t.skew = true;
    t.spine = false;
    return t;
}

// Spine form of the skew tree: coding nodes only.
inline CodingTree skew_kfree_spine(int k, int n_coding) {
    CodingTree t;
    t.coding = skew_kfree_coding(k, n_coding);
    t.pseudo = k - 2;
    t.kind = TreeKind::henson;
    t.k = k;
    t.skew = true;
    t.spine = true;
    return t;
}

namespace detail {

// Rado coding pattern: vertex 0 is the root; block b >= 1 holds vertices
// 2^b-1 .. 2^(b+1)-2 and realizes every passing pattern over the first b
// vertices in ascending binary-counter order, most significant bit at
// vertex 0. All later bits are zero.
inline BitSeq rado_coding_node(int j) {
    if (j == 0) return BitSeq();
    int b = 1;
    while ((std::int64_t(1) << (b + 1)) - 2 < j) ++b;
    std::int64_t w = j - ((std::int64_t(1) << b) - 1);
    std::string bits(j, '0');
    for (int i = 0; i < b; ++i)
        if ((w >> (b - 1 - i)) & 1) bits[i] = '1';
    return BitSeq(std::move(bits));
}

} // namespace detail

// Rado coding tree prefix: the complete binary tree with one coding node per
// level, patterns realizing every 0/1 profile over earlier coding nodes once
// depth permits.
inline CodingTree rado_tree(int n_coding) {
    if (n_coding < 0) throw length_error("coding node count must be nonnegative");
    int height = n_coding == 0 ? 1 : n_coding;
    if (height > 21) throw budget_exceeded("full Rado tree too deep; use the spine form");
    CodingTree t;
    t.tree = full_binary_tree(height);
    for (int j = 0; j < n_coding; ++j) t.coding.push_back(detail::rado_coding_node(j));
    t.pseudo = 0;
    t.kind = TreeKind::rado;
    t.k = 0;
    t.skew = false;
    t.spine = false;
    return t;
}

inline CodingTree rado_spine(int n_coding) {
    if (n_coding < 0) throw length_error("coding node count must be nonnegative");
    CodingTree t;
    for (int j = 0; j < n_coding; ++j) t.coding.push_back(detail::rado_coding_node(j));
    t.pseudo = 0;
    t.kind = TreeKind::rado;
    t.k = 0;
    t.skew = false;
    t.spine = true;
    return t;
}

} // namespace rct
