#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rct/level_tree.hpp"

namespace rct {

// A level-selected subtree of a host tree: S(n) sits inside T(m_n) and every
// realized one-step branch of every S(n)-node is represented by exactly one
// node of S(n+1). A k-strong subtree has k levels.
struct StrongSubtree {
    std::vector<std::size_t> level_map;          // host heights m_n, strictly increasing
    std::vector<std::vector<BitSeq>> level_sets; // S(n), lex sorted

    std::size_t height() const { return level_map.size(); }
    const BitSeq& root() const { return level_sets.front().front(); }

    std::vector<BitSeq> all_nodes() const {
        std::vector<BitSeq> out;
        for (const auto& lv : level_sets) out.insert(out.end(), lv.begin(), lv.end());
        return out;
    }

    friend bool operator==(const StrongSubtree& a, const StrongSubtree& b) {
        return a.level_map == b.level_map && a.level_sets == b.level_sets;
    }
};

inline bool is_strong_subtree(const LevelTree& host, const StrongSubtree& s,
                              std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (s.level_map.empty() || s.level_map.size() != s.level_sets.size())
        return fail("level map and level sets disagree");
    for (std::size_t i = 0; i + 1 < s.level_map.size(); ++i)
        if (s.level_map[i] >= s.level_map[i + 1]) return fail("level map not increasing");
    if (s.level_sets[0].size() != 1) return fail("root level must be a singleton");
    for (const auto& lv : s.level_sets)
        if (lv.empty()) return fail("empty level set");
    for (std::size_t n = 0; n < s.height(); ++n) {
        if (s.level_map[n] >= host.level_count()) return fail("level map exceeds host height");
        for (const BitSeq& x : s.level_sets[n]) {
            auto h = host.height_of(x);
            if (!h || *h != s.level_map[n]) return fail("node \"" + x.str() + "\" not at T(m_n)");
        }
    }
    for (std::size_t n = 0; n + 1 < s.height(); ++n) {
        std::vector<bool> used(s.level_sets[n + 1].size(), false);
        for (const BitSeq& x : s.level_sets[n]) {
            for (const BitSeq& u : host.succ(x)) {
                std::size_t found = 0, where = 0;
                for (std::size_t j = 0; j < s.level_sets[n + 1].size(); ++j)
                    if (u.is_prefix_of(s.level_sets[n + 1][j])) {
                        ++found;
                        where = j;
                    }
                if (found != 1)
                    return fail("branch \"" + u.str() + "\" of \"" + x.str() + "\" has " +
                                std::to_string(found) + " representatives");
                used[where] = true;
            }
        }
        for (std::size_t j = 0; j < used.size(); ++j)
            if (!used[j])
                return fail("node \"" + s.level_sets[n + 1][j].str() +
                            "\" represents no branch");
    }
    return true;
}

namespace detail {

// Enumerates choices of one extension per (node, branch) pair, in lex order.
template <typename Fn>
bool extend_strong_subtree(const LevelTree& host, const std::vector<std::size_t>& map,
                           std::size_t n, StrongSubtree& partial, Fn&& emit) {
    if (n + 1 == map.size()) return emit(partial);
    struct Slot {
        std::vector<BitSeq> candidates;
    };
    std::vector<Slot> slots;
    for (const BitSeq& x : partial.level_sets[n]) {
        for (const BitSeq& u : host.succ(x)) {
            Slot s;
            s.candidates = host.extensions_at(u, map[n + 1]);
            if (s.candidates.empty()) return true; // no completion through this shape
            slots.push_back(std::move(s));
        }
    }
    if (slots.empty()) return true; // all nodes maximal, cannot extend
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        std::vector<BitSeq> level;
        level.reserve(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) level.push_back(slots[i].candidates[pick[i]]);
        std::sort(level.begin(), level.end(), lex_less);
        partial.level_sets.push_back(std::move(level));
        bool keep_going = extend_strong_subtree(host, map, n + 1, partial, emit);
        partial.level_sets.pop_back();
        if (!keep_going) return false;
        // odometer over candidate choices
        std::size_t i = slots.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++pick[i] < slots[i].candidates.size()) {
                advanced = true;
                break;
            }
            pick[i] = 0;
        }
        if (!advanced) return true;
    }
}

template <typename Fn>
bool visit_with_map(const LevelTree& host, const std::vector<std::size_t>& map, Fn&& emit) {
    if (map.empty()) return true;
    for (const BitSeq& root : host.at_height(map[0])) {
        StrongSubtree s;
        s.level_map = map;
        s.level_sets.push_back({root});
        if (!extend_strong_subtree(host, map, 0, s, emit)) return false;
        s.level_sets.pop_back();
    }
    return true;
}

template <typename Fn>
bool for_each_level_map(std::size_t height, std::size_t k, Fn&& fn) {
    if (k == 0 || k > height) return true;
    std::vector<std::size_t> map(k);
    for (std::size_t i = 0; i < k; ++i) map[i] = i;
    while (true) {
        if (!fn(map)) return false;
        // next k-subset of {0..height-1} in lex order
        std::size_t i = k;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (map[i] < height - k + i) {
                ++map[i];
                for (std::size_t j = i + 1; j < k; ++j) map[j] = map[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;
    }
}

} // namespace detail

// Visit all k-strong subtrees of `host` (optionally restricted to one level
// map) in deterministic order: by level map, then root, then level sets.
// The visitor returns false to stop early; the function returns false if the
// visit was stopped.
template <typename Fn>
bool visit_strong_subtrees(const LevelTree& host, std::size_t k,
                           const std::optional<std::vector<std::size_t>>& level_map, Fn&& visitor) {
    if (level_map) return detail::visit_with_map(host, *level_map, visitor);
    return detail::for_each_level_map(host.level_count(), k, [&](const std::vector<std::size_t>& m) {
        return detail::visit_with_map(host, m, visitor);
    });
}

// All k-strong subtrees of `host`, deterministic order. Empty if none exist.
inline std::vector<StrongSubtree> enumerate_strong_subtrees(
    const LevelTree& host, std::size_t k,
    const std::optional<std::vector<std::size_t>>& level_map = std::nullopt) {
    std::vector<StrongSubtree> out;
    visit_strong_subtrees(host, k, level_map, [&](const StrongSubtree& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace rct
