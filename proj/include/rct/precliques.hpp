#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rct/coding_tree.hpp"

namespace rct {

// A level set whose members all pass 1 at a witness set of coding nodes
// decoding to an (a-2)-clique. Witness indices are real (nonnegative).
struct PreClique {
    std::size_t level = 0;    // common length of the level set
    int a = 0;
    std::vector<int> witness; // ascending coding indices, |witness| == a-2
    std::vector<BitSeq> level_set;
};

namespace detail {

// All ascending (a-2)-subsets of candidate indices, lex order.
template <typename Fn>
void for_each_index_set(const std::vector<int>& candidates, int size, Fn&& fn) {
    if (size <= 0 || size > (int)candidates.size()) return;
    std::vector<int> pick(size);
    std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
        if (pos == size) return fn(pick);
        for (int i = from; i < (int)candidates.size(); ++i) {
            pick[pos] = candidates[i];
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    rec(0, 0);
}

inline bool indices_form_clique(const CodingTree& host, const std::vector<int>& idx) {
    if (idx.size() <= 1) return true;
    FiniteGraph g = host.decode(false);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (!g.adjacent(idx[i], idx[j])) return false;
    return true;
}

} // namespace detail

// Pre-a-cliques of one level set X: every witness index set whose coding
// nodes decode to an (a-2)-clique and at which every member of X passes 1.
inline std::vector<PreClique> find_precliques(const std::vector<BitSeq>& X, const CodingTree& host,
                                              int a) {
    if (X.empty()) throw length_error("level set must be nonempty");
    std::size_t len = X[0].size();
    for (const BitSeq& x : X)
        if (x.size() != len) throw length_error("level set is ragged");
    if (a < 3) throw kind_mismatch("pre-clique parameter a must be at least 3");
    if (host.kind == TreeKind::henson && a > host.k)
        throw kind_mismatch("pre-clique parameter a exceeds the clique bound");
    if (!host.spine) {
        for (const BitSeq& x : X) {
            bool member = host.tree.contains(x) ||
                          (x.size() >= 1 && host.tree.contains(x.prefix(x.size() - 1)));
            if (!member)
                throw invariant_violation("\"" + x.str() +
                                          "\" is not a node or one-step extension of the host");
        }
    }
    FiniteGraph g = host.decode(false);
    std::vector<int> candidates;
    for (int i = 0; i < host.real_count(); ++i)
        if (host.coding_node(i).size() <= len) candidates.push_back(i);
    std::vector<PreClique> out;
    detail::for_each_index_set(candidates, a - 2, [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (!g.adjacent(idx[i], idx[j])) return true;
        for (const BitSeq& x : X) {
            for (int i : idx) {
                std::size_t cl = host.coding_node(i).size();
                if (cl >= x.size() || x.bit(cl) != 1) return true;
            }
        }
        out.push_back(PreClique{len, a, idx, X});
        return true;
    });
    return out;
}

namespace detail {

// Does the witness set qualify for the level-l cross-section of `nodes`?
// Members shorter than l drop out; members ending exactly at the witness
// level have no defined passing bit there and block the configuration.
inline bool preclique_at(const std::vector<BitSeq>& nodes, const CodingTree& host,
                         const std::vector<int>& idx, std::size_t l) {
    std::size_t lstar = 0;
    for (int i : idx) lstar = std::max(lstar, host.coding_node(i).size());
    if (lstar > l) return false;
    bool any = false;
    for (const BitSeq& t : nodes) {
        if (t.size() < l) continue;
        any = true;
        for (int i : idx) {
            std::size_t cl = host.coding_node(i).size();
            if (cl >= t.size() || t.bit(cl) != 1) return false;
        }
    }
    return any;
}

} // namespace detail

struct WitnessReport {
    bool ok = true;
    std::vector<PreClique> unwitnessed;
};

// Witnessing property of a subtree: every pre-a-clique arising in its level
// cross-sections admits a witness set drawn from the subtree's own coding
// nodes. With `new_only`, only configurations first appearing at a level are
// required to be witnessed there.
inline WitnessReport check_witnessing(const CodingTree& host, const std::vector<BitSeq>& subtree,
                                      const std::vector<BitSeq>& subtree_coding,
                                      bool new_only = false) {
    if (host.kind != TreeKind::henson)
        throw kind_mismatch("witnessing applies to K_k-free hosts");
    if (!host.spine)
        for (const BitSeq& t : subtree)
            if (!host.tree.contains(t))
                throw invariant_violation("subtree node \"" + t.str() + "\" not in the host");
    std::vector<int> sub_idx;
    for (const BitSeq& c : subtree_coding) {
        auto i = host.coding_index_of(c);
        if (!i || *i < 0)
            throw invariant_violation("\"" + c.str() + "\" is not a real coding node of the host");
        sub_idx.push_back(*i);
    }
    std::sort(sub_idx.begin(), sub_idx.end());
    FiniteGraph g = host.decode(false);
    std::size_t max_len = 0;
    for (const BitSeq& t : subtree) max_len = std::max(max_len, t.size());
    WitnessReport report;
    for (int a = 3; a <= host.k; ++a) {
        for (std::size_t l = 0; l <= max_len; ++l) {
            std::vector<int> candidates;
            for (int i = 0; i < host.real_count(); ++i)
                if (host.coding_node(i).size() <= l) candidates.push_back(i);
            auto clique_ok = [&](const std::vector<int>& idx) {
                for (std::size_t i = 0; i + 1 < idx.size(); ++i)
                    for (std::size_t j = i + 1; j < idx.size(); ++j)
                        if (!g.adjacent(idx[i], idx[j])) return false;
                return true;
            };
            std::optional<std::vector<int>> host_example;
            bool relevant = false;
            detail::for_each_index_set(candidates, a - 2, [&](const std::vector<int>& idx) {
                if (!clique_ok(idx)) return true;
                if (!detail::preclique_at(subtree, host, idx, l)) return true;
                if (new_only && l > 0 && detail::preclique_at(subtree, host, idx, l - 1))
                    return true;
                relevant = true;
                if (!host_example) host_example = idx;
                return false;
            });
            if (!relevant) continue;
            bool witnessed = false;
            detail::for_each_index_set(sub_idx, a - 2, [&](const std::vector<int>& idx) {
                if (clique_ok(idx) && detail::preclique_at(subtree, host, idx, l)) {
                    witnessed = true;
                    return false;
                }
                return true;
            });
            if (!witnessed) {
                std::set<std::string> xs;
                for (const BitSeq& t : subtree)
                    if (t.size() >= l) xs.insert(t.prefix(l).str());
                std::vector<BitSeq> level_set;
                for (const std::string& s : xs) level_set.push_back(BitSeq(s));
                report.ok = false;
                report.unwitnessed.push_back(PreClique{l, a, *host_example, level_set});
            }
        }
    }
    return report;
}

// Trace of new pre-clique configurations over a node set, abstracted for
// similarity typing: for each witness set the minimal level where the
// configuration holds, recorded as (a, surviving member positions, relative
// level bucket). Buckets count the set's distinct node lengths below the
// minimal level.
struct TraceEntry {
    int a = 0;
    std::vector<int> participants;
    int bucket = 0;

    friend bool operator<(const TraceEntry& x, const TraceEntry& y) {
        return std::tie(x.a, x.participants, x.bucket) < std::tie(y.a, y.participants, y.bucket);
    }
    friend bool operator==(const TraceEntry& x, const TraceEntry& y) {
        return x.a == y.a && x.participants == y.participants && x.bucket == y.bucket;
    }
};

inline std::vector<TraceEntry> preclique_trace(const std::vector<BitSeq>& nodes_sorted,
                                               const CodingTree& host) {
    if (host.kind != TreeKind::henson)
        throw kind_mismatch("pre-clique traces apply to K_k-free hosts");
    std::set<TraceEntry> entries;
    std::size_t max_len = 0;
    for (const BitSeq& t : nodes_sorted) max_len = std::max(max_len, t.size());
    std::vector<std::size_t> distinct_lengths;
    for (const BitSeq& t : nodes_sorted) distinct_lengths.push_back(t.size());
    std::sort(distinct_lengths.begin(), distinct_lengths.end());
    distinct_lengths.erase(std::unique(distinct_lengths.begin(), distinct_lengths.end()),
                           distinct_lengths.end());
    FiniteGraph g = host.decode(false);
    std::vector<int> candidates;
    for (int i = 0; i < host.real_count(); ++i)
        if (host.coding_node(i).size() <= max_len) candidates.push_back(i);
    for (int a = 3; a <= host.k; ++a) {
        detail::for_each_index_set(candidates, a - 2, [&](const std::vector<int>& idx) {
            for (std::size_t i = 0; i + 1 < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    if (!g.adjacent(idx[i], idx[j])) return true;
            for (std::size_t l = 0; l <= max_len; ++l) {
                if (!detail::preclique_at(nodes_sorted, host, idx, l)) continue;
                TraceEntry e;
                e.a = a;
                for (std::size_t j = 0; j < nodes_sorted.size(); ++j)
                    if (nodes_sorted[j].size() >= l) e.participants.push_back((int)j);
                e.bucket = (int)(std::lower_bound(distinct_lengths.begin(), distinct_lengths.end(),
                                                  l) -
                                 distinct_lengths.begin());
                entries.insert(std::move(e));
                break;
            }
            return true;
        });
    }
    return std::vector<TraceEntry>(entries.begin(), entries.end());
}

} // namespace rct
