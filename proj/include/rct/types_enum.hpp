#pragma once

#include <array>
#include <set>
#include <vector>

#include "rct/builders.hpp"
#include "rct/level_tree.hpp"
#include "rct/similarity.hpp"

namespace rct {

// All antichains of the host's first `max_depth` real coding nodes whose
// decode matches G exactly as an ordered graph. Chains come back sorted by
// coding index (equivalently by length).
inline std::vector<std::vector<BitSeq>> graph_to_antichains(const FiniteGraph& G,
                                                            const CodingTree& host,
                                                            int max_depth) {
    if (host.real_count() < max_depth)
        throw length_error("host carries " + std::to_string(host.real_count()) +
                           " coding nodes, depth " + std::to_string(max_depth) + " requested");
    std::vector<std::vector<BitSeq>> out;
    if (G.order == 0) return out;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == G.order) {
            std::vector<BitSeq> chain;
            for (int i : pick) chain.push_back(host.coding_node(i));
            out.push_back(std::move(chain));
            return;
        }
        for (int i = from; i < max_depth; ++i) {
            const BitSeq& cand = host.coding_node(i);
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p) {
                const BitSeq& prev = host.coding_node(pick[p]);
                if (prev.comparable_with(cand)) ok = false;
                else if (cand.bit(prev.size()) != (G.adjacent(p, pos) ? 1 : 0)) ok = false;
            }
            if (!ok) continue;
            pick.push_back(i);
            rec(pos + 1, i + 1);
            pick.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

struct TypeEnumeration {
    std::vector<SimilarityType> types; // sorted by canonical key
    int count = 0;
    bool saturated = false;      // no new types across the last two depth increments
    bool grew_last_step = false; // the last increment added types
};

namespace detail {

inline std::set<SimilarityType> types_at_depth(const FiniteGraph& G, const CodingTree& host,
                                               SimMode mode, int depth) {
    std::set<SimilarityType> types;
    for (const std::vector<BitSeq>& chain : graph_to_antichains(G, host, depth))
        types.insert(canonical_type(chain, mode, &host));
    return types;
}

} // namespace detail

// Canonical types of all antichains coding G within the given depth, plus a
// saturation heuristic: the type set did not change over the last two depth
// increments. Finitely many types exist in the infinite limit but no depth
// bound is computed here, so saturation is reported, never asserted.
inline TypeEnumeration enumerate_types(const FiniteGraph& G, const CodingTree& host, SimMode mode,
                                       int max_depth) {
    std::set<SimilarityType> now = detail::types_at_depth(G, host, mode, max_depth);
    TypeEnumeration out;
    out.types.assign(now.begin(), now.end());
    out.count = (int)now.size();
    if (max_depth >= 1) {
        std::set<SimilarityType> prev = detail::types_at_depth(G, host, mode, max_depth - 1);
        out.grew_last_step = prev != now;
        if (max_depth >= 2) {
            std::set<SimilarityType> prev2 = detail::types_at_depth(G, host, mode, max_depth - 2);
            out.saturated = !out.grew_last_step && prev2 == prev;
        }
    }
    return out;
}

struct DevlinTypes {
    std::vector<SimilarityType> types;
    std::vector<std::array<BitSeq, 2>> witnesses; // one pair per type
};

// Similarity types of the two-node antichains coding pairs of rationals:
// incomparable sequences of different lengths whose longer member passes 0
// at the shorter one. Exactly two types arise, told apart by the side the
// shorter node takes at the meet.
inline DevlinTypes devlin_pair_types() {
    std::vector<BitSeq> universe;
    for (std::size_t l = 0; l <= 4; ++l)
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << l); ++m)
            universe.push_back(BitSeq::from_mask(m, l));
    sort_shortlex(universe);
    DevlinTypes out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = 0; j < universe.size(); ++j) {
            const BitSeq &s = universe[i], &t = universe[j];
            if (s.size() >= t.size()) continue;     // normalize: s shorter
            if (s.comparable_with(t)) continue;     // antichain
            if (t.bit(s.size()) != 0) continue;     // passing number 0 at the shorter level
            SimilarityType type = canonical_type({s, t}, SimMode::strong);
            bool known = false;
            for (const SimilarityType& have : out.types)
                if (have == type) {
                    known = true;
                    break;
                }
            if (!known) {
                out.types.push_back(type);
                out.witnesses.push_back({s, t});
            }
        }
    }
    return out;
}

} // namespace rct
