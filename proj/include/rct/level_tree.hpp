#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rct/bitseq.hpp"
#include "rct/errors.hpp"

namespace rct {

class LevelTree;
struct LevelTreeClosure;
LevelTreeClosure make_level_tree(const std::vector<BitSeq>& nodes,
                                 const std::vector<std::size_t>& levels_in);

// A level-closed set of binary sequences with an explicit level set L:
// every node length is a member of L, and for every node t and every
// l in L with l <= |t| the restriction t|l is again a node.
class LevelTree {
public:
    LevelTree() = default;

    // Validating constructor: nodes must already be level-closed.
    static LevelTree from_parts(std::vector<BitSeq> nodes, std::vector<std::size_t> levels) {
        LevelTree t = assemble(std::move(nodes), std::move(levels));
        std::string why;
        if (!t.closure_holds(&why)) throw invariant_violation("level tree not closed: " + why);
        return t;
    }

    std::size_t level_count() const { return levels_.size(); }
    bool empty() const { return nodes_.empty(); }
    const std::vector<std::size_t>& levels() const { return levels_; }
    const std::vector<BitSeq>& nodes() const { return nodes_; }

    std::size_t level_length(std::size_t height) const { return levels_.at(height); }

    // T(n): nodes of height n. Heights coincide with level indices because
    // of closure.
    std::span<const BitSeq> at_height(std::size_t n) const {
        if (n >= levels_.size()) return {};
        return std::span<const BitSeq>(nodes_.data() + level_begin_[n],
                                       level_begin_[n + 1] - level_begin_[n]);
    }

    bool contains(const BitSeq& t) const {
        auto h = height_for_length(t.size());
        if (!h) return false;
        auto lv = at_height(*h);
        return std::binary_search(lv.begin(), lv.end(), t,
                                  [](const BitSeq& a, const BitSeq& b) { return lex_less(a, b); });
    }

    std::optional<std::size_t> height_of(const BitSeq& t) const {
        auto h = height_for_length(t.size());
        if (!h || !contains(t)) return std::nullopt;
        return h;
    }

    std::optional<std::size_t> height_for_length(std::size_t len) const {
        auto it = std::lower_bound(levels_.begin(), levels_.end(), len);
        if (it == levels_.end() || *it != len) return std::nullopt;
        return std::size_t(it - levels_.begin());
    }

    // Succ_T(t): one-step branch extensions of t realized by deeper nodes.
    // Closure makes the next level sufficient to read them off.
    std::vector<BitSeq> succ(const BitSeq& t) const {
        std::vector<BitSeq> out;
        auto h = height_for_length(t.size());
        if (!h || *h + 1 >= levels_.size()) return out;
        bool have0 = false, have1 = false;
        for (const BitSeq& x : at_height(*h + 1)) {
            if (!t.is_prefix_of(x)) continue;
            int b = x.bit(t.size());
            (b ? have1 : have0) = true;
        }
        if (have0) out.push_back(t.append(0));
        if (have1) out.push_back(t.append(1));
        return out;
    }

    // Nodes at height n extending u, in lex order.
    std::vector<BitSeq> extensions_at(const BitSeq& u, std::size_t n) const {
        std::vector<BitSeq> out;
        for (const BitSeq& x : at_height(n))
            if (u.is_prefix_of(x)) out.push_back(x);
        return out;
    }

    bool closure_holds(std::string* why = nullptr) const {
        for (const BitSeq& t : nodes_) {
            if (!height_for_length(t.size())) {
                if (why) *why = "length of \"" + t.str() + "\" is not a level";
                return false;
            }
            for (std::size_t l : levels_) {
                if (l >= t.size()) break;
                if (!contains(t.prefix(l))) {
                    if (why)
                        *why = "restriction of \"" + t.str() + "\" to level " + std::to_string(l) +
                               " is missing";
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const LevelTree& a, const LevelTree& b) {
        return a.levels_ == b.levels_ && a.nodes_ == b.nodes_;
    }

    friend struct LevelTreeClosure;
    friend LevelTreeClosure make_level_tree(const std::vector<BitSeq>&,
                                            const std::vector<std::size_t>&);

private:
    static LevelTree assemble(std::vector<BitSeq> nodes, std::vector<std::size_t> levels) {
        LevelTree t;
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        sort_shortlex(nodes);
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        t.levels_ = std::move(levels);
        t.nodes_ = std::move(nodes);
        for (const BitSeq& n : t.nodes_)
            if (std::find(t.levels_.begin(), t.levels_.end(), n.size()) == t.levels_.end())
                throw level_mismatch("node \"" + n.str() + "\" has length " +
                                     std::to_string(n.size()) + " absent from the level set");
        t.level_begin_.assign(t.levels_.size() + 1, 0);
        std::size_t idx = 0;
        for (std::size_t h = 0; h < t.levels_.size(); ++h) {
            t.level_begin_[h] = idx;
            while (idx < t.nodes_.size() && t.nodes_[idx].size() == t.levels_[h]) ++idx;
        }
        t.level_begin_[t.levels_.size()] = idx;
        return t;
    }

    std::vector<std::size_t> levels_;
    std::vector<BitSeq> nodes_; // shortlex sorted
    std::vector<std::size_t> level_begin_;
};

struct LevelTreeClosure {
    LevelTree tree;
    bool was_closed = false;
};

// Closure of `nodes` under restriction to `levels`, reporting whether the
// input was already closed.
inline LevelTreeClosure make_level_tree(const std::vector<BitSeq>& nodes,
                                        const std::vector<std::size_t>& levels_in) {
    std::vector<std::size_t> levels = levels_in;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::set<std::size_t> level_set(levels.begin(), levels.end());
    for (const BitSeq& t : nodes)
        if (!level_set.count(t.size()))
            throw level_mismatch("node \"" + t.str() + "\" has length " +
                                 std::to_string(t.size()) + " absent from the level set");
    std::set<std::string> closure, orig;
    for (const BitSeq& t : nodes) {
        orig.insert(t.str());
        for (std::size_t l : levels) {
            if (l > t.size()) break;
            closure.insert(t.prefix(l).str());
        }
    }
    std::vector<BitSeq> all;
    all.reserve(closure.size());
    for (const std::string& s : closure) all.push_back(BitSeq(s));
    bool was_closed = closure.size() == orig.size();
    LevelTree tree = LevelTree::assemble(std::move(all), std::move(levels));
    return LevelTreeClosure{std::move(tree), was_closed};
}

// The complete binary tree with levels 0..height-1.
inline LevelTree full_binary_tree(std::size_t height) {
    std::vector<BitSeq> nodes;
    std::vector<std::size_t> levels;
    for (std::size_t l = 0; l < height; ++l) {
        levels.push_back(l);
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << l); ++m)
            nodes.push_back(BitSeq::from_mask(m, l));
    }
    return LevelTree::from_parts(std::move(nodes), std::move(levels));
}

} // namespace rct
