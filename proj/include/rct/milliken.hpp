#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rct/strong_subtree.hpp"

namespace rct {

// View a strong subtree as a level tree in its own right; level l of the
// result is the host length at height level_map[l].
inline LevelTree subtree_as_tree(const StrongSubtree& s, const LevelTree& host) {
    std::vector<BitSeq> nodes = s.all_nodes();
    std::vector<std::size_t> levels;
    for (std::size_t m : s.level_map) levels.push_back(host.level_length(m));
    return LevelTree::from_parts(std::move(nodes), std::move(levels));
}

// Recast a subtree enumerated inside `outer` (heights relative to outer's
// level list) as a subtree of the original host.
inline StrongSubtree compose_subtree(const StrongSubtree& inner, const StrongSubtree& outer) {
    StrongSubtree out;
    out.level_sets = inner.level_sets;
    for (std::size_t m : inner.level_map) out.level_map.push_back(outer.level_map[m]);
    return out;
}

using SubtreeColoring = std::function<int(const StrongSubtree&)>;

// Finite search for the conclusion of Milliken's theorem: a strong subtree of
// height `target_height` all of whose k-strong subtrees receive one color.
// Finite hosts need not contain a witness; returns nullopt in that case.
inline std::optional<StrongSubtree> milliken_search(const LevelTree& host, std::size_t k,
                                                    const SubtreeColoring& coloring,
                                                    std::size_t target_height) {
    if (target_height < k) throw length_error("target height must be at least k");
    std::optional<StrongSubtree> witness;
    visit_strong_subtrees(host, target_height, std::nullopt, [&](const StrongSubtree& s) {
        LevelTree inner_host = subtree_as_tree(s, host);
        bool mono = true;
        std::optional<int> color;
        visit_strong_subtrees(inner_host, k, std::nullopt, [&](const StrongSubtree& r) {
            int c = coloring(compose_subtree(r, s));
            if (!color) {
                color = c;
            } else if (*color != c) {
                mono = false;
                return false;
            }
            return true;
        });
        if (mono) {
            witness = s;
            return false;
        }
        return true;
    });
    return witness;
}

using TupleColoring = std::function<int(const std::vector<BitSeq>&)>;

struct LevelProductWitness {
    std::vector<std::size_t> level_map;
    std::vector<StrongSubtree> subtrees;
};

namespace detail {

inline bool product_monochromatic(const std::vector<StrongSubtree>& subtrees,
                                  const TupleColoring& coloring, std::size_t height) {
    std::optional<int> color;
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < height; ++n) {
        idx.assign(subtrees.size(), 0);
        while (true) {
            std::vector<BitSeq> tuple;
            tuple.reserve(subtrees.size());
            for (std::size_t i = 0; i < subtrees.size(); ++i)
                tuple.push_back(subtrees[i].level_sets[n][idx[i]]);
            int c = coloring(tuple);
            if (!color)
                color = c;
            else if (*color != c)
                return false;
            std::size_t i = subtrees.size();
            bool advanced = false;
            while (i > 0) {
                --i;
                if (++idx[i] < subtrees[i].level_sets[n].size()) {
                    advanced = true;
                    break;
                }
                idx[i] = 0;
            }
            if (!advanced) break;
        }
    }
    return true;
}

template <typename Fn>
bool product_search(const std::vector<LevelTree>& forest, const std::vector<std::size_t>& map,
                    std::size_t i, std::vector<StrongSubtree>& chosen, Fn&& fn) {
    if (i == forest.size()) return fn(chosen);
    bool keep_going = true;
    visit_strong_subtrees(forest[i], map.size(), map, [&](const StrongSubtree& s) {
        chosen.push_back(s);
        keep_going = product_search(forest, map, i + 1, chosen, fn);
        chosen.pop_back();
        return keep_going;
    });
    return keep_going;
}

} // namespace detail

// Finite search for the conclusion of the Halpern-Lauchli theorem on a
// forest of d finite trees: strong subtrees sharing one level map with the
// product coloring constant on the union of their level products.
inline std::optional<LevelProductWitness> hl_search(const std::vector<LevelTree>& forest,
                                                    const TupleColoring& coloring,
                                                    std::size_t target_height) {
    if (forest.empty()) throw length_error("forest must contain at least one tree");
    std::size_t min_height = forest[0].level_count();
    for (const LevelTree& t : forest) min_height = std::min(min_height, t.level_count());
    std::optional<LevelProductWitness> witness;
    detail::for_each_level_map(min_height, target_height, [&](const std::vector<std::size_t>& map) {
        std::vector<StrongSubtree> chosen;
        return detail::product_search(forest, map, 0, chosen,
                                      [&](const std::vector<StrongSubtree>& subtrees) {
                                          if (detail::product_monochromatic(subtrees, coloring,
                                                                            target_height)) {
                                              witness = LevelProductWitness{map, subtrees};
                                              return false;
                                          }
                                          return true;
                                      });
    });
    return witness;
}

} // namespace rct
