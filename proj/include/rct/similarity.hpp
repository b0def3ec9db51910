#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rct/coding_tree.hpp"
#include "rct/precliques.hpp"

namespace rct {

// Longest common initial segments of all pairs; the pairwise meets already
// form a meet-closed set.
inline std::vector<BitSeq> meet_closure(std::vector<BitSeq> nodes) {
    std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) nodes.push_back(meet(nodes[i], nodes[j]));
    sort_shortlex(nodes);
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

// A meet-closed node set with designated coding nodes, the raw material of
// similarity checking.
struct NodeSet {
    std::vector<BitSeq> nodes;  // shortlex sorted, meet-closed
    std::vector<bool> coding;   // per node

    static NodeSet close(std::vector<BitSeq> raw, const CodingTree* host = nullptr) {
        NodeSet s;
        s.nodes = meet_closure(std::move(raw));
        s.coding.reserve(s.nodes.size());
        for (const BitSeq& t : s.nodes) {
            bool flag = false;
            if (host) {
                auto idx = host->coding_index_of(t);
                flag = idx.has_value();
            }
            s.coding.push_back(flag);
        }
        return s;
    }

    std::size_t size() const { return nodes.size(); }
};

enum class SimMode { strong, strict };

struct SimilarityType {
    std::string canonical_form;
    std::optional<std::string> strict_trace;

    std::string key() const {
        return strict_trace ? canonical_form + "\n#trace\n" + *strict_trace : canonical_form;
    }
    friend bool operator==(const SimilarityType& a, const SimilarityType& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const SimilarityType& a, const SimilarityType& b) {
        return a.key() < b.key();
    }
};

namespace detail {

// Per node: length rank (ties share a rank), parent in the meet tree, the
// branch side where the parent splits inside the set (single children carry
// no observable side), coding flag, and passing numbers at the set's shorter
// coding nodes. This is exactly the data a strong similarity map preserves.
inline std::string canonical_form_of(const NodeSet& s) {
    std::vector<std::size_t> distinct_lengths;
    for (const BitSeq& t : s.nodes) distinct_lengths.push_back(t.size());
    std::sort(distinct_lengths.begin(), distinct_lengths.end());
    distinct_lengths.erase(std::unique(distinct_lengths.begin(), distinct_lengths.end()),
                           distinct_lengths.end());
    auto rank_of = [&](std::size_t len) {
        return std::lower_bound(distinct_lengths.begin(), distinct_lengths.end(), len) -
               distinct_lengths.begin();
    };
    auto parent_of = [&](std::size_t j) -> int {
        int best = -1;
        for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            if (i == j) continue;
            if (s.nodes[i].size() < s.nodes[j].size() && s.nodes[i].is_prefix_of(s.nodes[j]))
                if (best < 0 || s.nodes[best].size() < s.nodes[i].size()) best = (int)i;
        }
        return best;
    };
    std::vector<int> parent(s.size());
    std::vector<int> child_count(s.size(), 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
        parent[j] = parent_of(j);
        if (parent[j] >= 0) ++child_count[parent[j]];
    }
    std::ostringstream out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        out << j << ":r" << rank_of(s.nodes[j].size()) << ",p" << parent[j] << ",s";
        if (parent[j] >= 0 && child_count[parent[j]] >= 2)
            out << s.nodes[j].bit(s.nodes[parent[j]].size());
        else
            out << "-";
        out << ",c" << (s.coding[j] ? 1 : 0) << ",v";
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s.coding[i] && s.nodes[i].size() < s.nodes[j].size())
                out << s.nodes[j].bit(s.nodes[i].size());
        out << ";";
    }
    return out.str();
}

inline std::string trace_string(const std::vector<TraceEntry>& trace) {
    std::ostringstream out;
    for (const TraceEntry& e : trace) {
        out << "a" << e.a << ",b" << e.bucket << ",P";
        for (std::size_t i = 0; i < e.participants.size(); ++i) {
            if (i) out << ".";
            out << e.participants[i];
        }
        out << ";";
    }
    return out.str();
}

inline bool verify_similarity_conditions(const NodeSet& A, const NodeSet& B,
                                         const std::vector<std::size_t>& map) {
    std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (A.coding[i] != B.coding[map[i]]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const BitSeq &a1 = A.nodes[i], &a2 = A.nodes[j];
            const BitSeq &b1 = B.nodes[map[i]], &b2 = B.nodes[map[j]];
            if (lex_less(a1, a2) != lex_less(b1, b2)) return false;
            if ((a1.size() < a2.size()) != (b1.size() < b2.size())) return false;
            if (a1.is_prefix_of(a2) != b1.is_prefix_of(b2)) return false;
            // meets map to meets
            const BitSeq ma = meet(a1, a2);
            const BitSeq mb = meet(b1, b2);
            auto ia = std::find(A.nodes.begin(), A.nodes.end(), ma);
            auto ib = std::find(B.nodes.begin(), B.nodes.end(), mb);
            if (ia == A.nodes.end() || ib == B.nodes.end()) return false;
            if (map[ia - A.nodes.begin()] != std::size_t(ib - B.nodes.begin())) return false;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (!A.coding[c] || A.nodes[c].size() >= A.nodes[i].size()) continue;
            if (A.nodes[i].bit(A.nodes[c].size()) != B.nodes[map[i]].bit(B.nodes[map[c]].size()))
                return false;
        }
    }
    return true;
}

} // namespace detail

// The only bijection that can satisfy the similarity conditions pairs nodes
// by length rank and lex position; build it and verify all six conditions.
inline std::optional<std::vector<std::pair<BitSeq, BitSeq>>> strong_similarity_map(
    const NodeSet& A, const NodeSet& B) {
    if (A.size() != B.size()) return std::nullopt;
    std::size_t n = A.size();
    auto sorted_idx = [](const NodeSet& s) {
        std::vector<std::size_t> idx(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return shortlex_less(s.nodes[x], s.nodes[y]);
        });
        return idx;
    };
    std::vector<std::size_t> ia = sorted_idx(A), ib = sorted_idx(B);
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[ia[i]] = ib[i];
    if (!detail::verify_similarity_conditions(A, B, map)) return std::nullopt;
    std::vector<std::pair<BitSeq, BitSeq>> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(A.nodes[i], B.nodes[map[i]]);
    return out;
}

inline std::optional<std::vector<std::pair<BitSeq, BitSeq>>> strong_similarity_map(
    const std::vector<BitSeq>& S, const std::vector<BitSeq>& T, const CodingTree* host = nullptr) {
    return strong_similarity_map(NodeSet::close(S, host), NodeSet::close(T, host));
}

// Canonical form of the meet-closure of S; in strict mode the placement of
// new pre-clique configurations is appended.
inline SimilarityType canonical_type(const std::vector<BitSeq>& S, SimMode mode,
                                     const CodingTree* host = nullptr) {
    if (mode == SimMode::strict && (!host || host->kind != TreeKind::henson))
        throw kind_mismatch("strict similarity needs a K_k-free host");
    NodeSet set = NodeSet::close(S, host);
    SimilarityType t;
    t.canonical_form = detail::canonical_form_of(set);
    if (mode == SimMode::strict)
        t.strict_trace = detail::trace_string(preclique_trace(set.nodes, *host));
    return t;
}

} // namespace rct
