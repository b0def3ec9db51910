#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rct/bitseq.hpp"
#include "rct/errors.hpp"

namespace rct {

// An ordered finite graph. Vertex order is part of identity; `labels` carries
// external names for the positions (coding indices, possibly negative).
struct FiniteGraph {
    int order = 0;
    std::vector<int> labels;                 // size == order
    std::vector<std::pair<int, int>> edges;  // position pairs i < j, sorted
    std::vector<std::uint64_t> adj;          // adjacency rows over positions

    static FiniteGraph make(int order, std::vector<std::pair<int, int>> edges,
                            std::vector<int> labels = {}) {
        if (order < 0 || order > 63)
            throw length_error("graph order out of supported range [0,63]");
        FiniteGraph g;
        g.order = order;
        if (labels.empty())
            for (int i = 0; i < order; ++i) labels.push_back(i);
        if ((int)labels.size() != order) throw length_error("label list size mismatch");
        g.labels = std::move(labels);
        g.adj.assign(order, 0);
        for (auto& [i, j] : edges) {
            if (i == j) throw invariant_violation("loops are not allowed");
            if (i < 0 || j < 0 || i >= order || j >= order)
                throw invariant_violation("edge endpoint out of range");
            if (i > j) std::swap(i, j);
            g.adj[i] |= std::uint64_t(1) << j;
            g.adj[j] |= std::uint64_t(1) << i;
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.edges = std::move(edges);
        return g;
    }

    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1; }

    friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
        return a.order == b.order && a.edges == b.edges;
    }
};

// Read a graph off a chain of sequences with strictly increasing lengths:
// vertices v_n in chain order, with an edge v_m v_n (m < n) exactly when the
// later sequence has bit 1 at the length of the earlier one.
inline FiniteGraph decode_graph(const std::vector<BitSeq>& chain, std::vector<int> labels = {}) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i].size() >= chain[i + 1].size())
            throw length_error("chain lengths must be strictly increasing");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t n = 0; n < chain.size(); ++n)
        for (std::size_t m = 0; m < n; ++m)
            if (passing_number(chain[n], chain[m]) == 1)
                edges.emplace_back((int)m, (int)n);
    return FiniteGraph::make((int)chain.size(), std::move(edges), std::move(labels));
}

namespace detail {

inline bool clique_extend(const FiniteGraph& g, std::uint64_t allowed, int start, int need) {
    if (need == 0) return true;
    for (int v = start; v < g.order; ++v) {
        if (!((allowed >> v) & 1)) continue;
        if (clique_extend(g, allowed & g.adj[v], v + 1, need - 1)) return true;
    }
    return false;
}

} // namespace detail

// Exhaustive check for a clique of `size` vertices.
inline bool has_clique(const FiniteGraph& g, int size) {
    if (size <= 0) return true;
    if (size == 1) return g.order > 0;
    std::uint64_t all = g.order >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.order) - 1);
    return detail::clique_extend(g, all, 0, size);
}

// Clique of `size` within the restricted vertex set.
inline bool has_clique_within(const FiniteGraph& g, std::uint64_t vertex_mask, int size) {
    if (size <= 0) return true;
    if (size == 1) return vertex_mask != 0;
    return detail::clique_extend(g, vertex_mask, 0, size);
}

// Does `pattern` occur in `host` as an order-preserving induced subgraph?
inline bool ordered_embeds(const FiniteGraph& pattern, const FiniteGraph& host) {
    if (pattern.order > host.order) return false;
    std::vector<int> pick;
    std::function<bool(int, int)> rec = [&](int next_pos, int host_from) -> bool {
        if (next_pos == pattern.order) return true;
        for (int v = host_from; v < host.order; ++v) {
            bool ok = true;
            for (int p = 0; p < next_pos && ok; ++p)
                if (pattern.adjacent(p, next_pos) != host.adjacent(pick[p], v)) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            if (rec(next_pos + 1, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace rct
