#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "rct/errors.hpp"
#include "rct/level_tree.hpp"
#include "rct/orders.hpp"
#include "rct/strong_subtree.hpp"

namespace rct {

// k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == k) {
            out.push_back(pick);
            return;
        }
        for (int i = from; i < n; ++i) {
            pick[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

struct RamseyResult {
    bool holds = false;
    std::optional<std::vector<int>> counterexample; // color per k-subset, lex subset order
    std::uint64_t colorings_checked = 0;
    bool exhaustive = true;
};

namespace detail {

struct RamseyInstance {
    int n, k, r, m;
    std::vector<std::vector<int>> ksubsets;
    // per m-subset, the indices of its k-subsets
    std::vector<std::vector<int>> msubset_slots;

    RamseyInstance(int n_, int k_, int r_, int m_) : n(n_), k(k_), r(r_), m(m_) {
        ksubsets = subsets_of(n, k);
        std::vector<std::vector<int>> msubsets = subsets_of(n, m);
        for (const auto& ms : msubsets) {
            std::vector<int> slots;
            for (std::size_t idx = 0; idx < ksubsets.size(); ++idx) {
                bool inside = true;
                for (int v : ksubsets[idx])
                    if (!std::binary_search(ms.begin(), ms.end(), v)) {
                        inside = false;
                        break;
                    }
                if (inside) slots.push_back((int)idx);
            }
            msubset_slots.push_back(std::move(slots));
        }
    }

    bool has_mono_subset(const std::vector<int>& coloring) const {
        for (const auto& slots : msubset_slots) {
            int c0 = coloring[slots[0]];
            bool mono = true;
            for (int s : slots)
                if (coloring[s] != c0) {
                    mono = false;
                    break;
                }
            if (mono) return true;
        }
        return false;
    }

    std::vector<int> coloring_from_index(std::uint64_t idx) const {
        std::vector<int> c(ksubsets.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = int(idx % r);
            idx /= r;
        }
        return c;
    }
};

} // namespace detail

// One coloring, non-exhaustive: does it admit a monochromatic m-subset?
inline bool coloring_has_mono_subset(int n, int k, int m, const std::vector<int>& coloring) {
    detail::RamseyInstance inst(n, k, 1, m);
    if (coloring.size() != inst.ksubsets.size())
        throw length_error("coloring must assign a color to every k-subset");
    return inst.has_mono_subset(coloring);
}

// Exhaustive finite Ramsey verification: every r-coloring of the k-subsets
// of {0..n-1} admits a monochromatic m-subset, or the first counterexample
// in counter order. The sweep parallelizes over coloring ranges.
inline RamseyResult finite_ramsey_check(int n, int k, int r, int m,
                                        std::uint64_t budget = std::uint64_t(1) << 24,
                                        unsigned jobs = 1) {
    if (!(1 <= k && k <= m && m <= n)) throw length_error("need 1 <= k <= m <= n");
    if (r < 1) throw length_error("need at least one color");
    detail::RamseyInstance inst(n, k, r, m);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < inst.ksubsets.size(); ++i) {
        if (total > budget / (std::uint64_t)r + 1) {
            total = budget + 1;
            break;
        }
        total *= (std::uint64_t)r;
    }
    if (total > budget)
        throw budget_exceeded("exhaustive sweep of " + std::to_string(inst.ksubsets.size()) +
                              " slots with " + std::to_string(r) +
                              " colors exceeds the coloring budget");
    if (jobs < 1) jobs = 1;
    jobs = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1));
    std::vector<std::uint64_t> first_bad(jobs, total);
    auto worker = [&](unsigned w) {
        std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (!inst.has_mono_subset(inst.coloring_from_index(idx))) {
                first_bad[w] = idx;
                return;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t bad = total;
    for (std::uint64_t b : first_bad) bad = std::min(bad, b);
    RamseyResult res;
    res.colorings_checked = total;
    res.exhaustive = true;
    if (bad == total) {
        res.holds = true;
    } else {
        res.holds = false;
        res.counterexample = inst.coloring_from_index(bad);
    }
    return res;
}

struct PersistenceResult {
    bool holds = false;
    std::optional<StrongSubtree> counterexample;
    std::uint64_t subtrees_checked = 0;
};

// Both pair colors persist in every strong subtree with at least two levels
// of the full binary tree of height n. A subtree with more levels restricts
// to a 2-level strong subtree on its first two levels and inherits its
// pairs, so the exhaustive sweep over 2-level subtrees decides the property
// for all of them.
inline PersistenceResult verify_sierpinski_persistence(int n) {
    if (n < 1) throw length_error("height must be positive");
    if (n > 7) throw budget_exceeded("persistence sweep is limited to height 7");
    LevelTree host = full_binary_tree((std::size_t)n);
    PersistenceResult res;
    visit_strong_subtrees(host, 2, std::nullopt, [&](const StrongSubtree& s) {
        ++res.subtrees_checked;
        std::vector<BitSeq> nodes = s.all_nodes();
        bool c0 = false, c1 = false;
        for (std::size_t i = 0; i < nodes.size() && !(c0 && c1); ++i)
            for (std::size_t j = i + 1; j < nodes.size() && !(c0 && c1); ++j)
                (sierpinski_color(nodes[i], nodes[j]) ? c1 : c0) = true;
        if (!(c0 && c1)) {
            res.counterexample = s;
            return false;
        }
        return true;
    });
    res.holds = !res.counterexample.has_value();
    return res;
}

// Generic experiment driver over small colored universes.
using ExperimentElement = std::variant<std::vector<int>, std::pair<BitSeq, BitSeq>>;

struct ColoringExperiment {
    std::string universe;
    std::string search;
    int colors = 0;
    std::vector<std::pair<std::string, int>> assignment; // element -> color, total
    bool found = false;
    std::string result;
    std::uint64_t budget = 0;
};

namespace detail {

inline std::string element_repr(const ExperimentElement& e) {
    std::ostringstream out;
    if (std::holds_alternative<std::vector<int>>(e)) {
        const auto& v = std::get<std::vector<int>>(e);
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "." : "") << v[i];
    } else {
        const auto& p = std::get<std::pair<BitSeq, BitSeq>>(e);
        out << "(" << p.first.str() << "|" << p.second.str() << ")";
    }
    return out.str();
}

inline int parse_int_field(const std::string& spec, const std::string& field) {
    auto pos = spec.find(field + "=");
    if (pos == std::string::npos) throw unknown_universe("missing field " + field + " in \"" + spec + "\"");
    return std::stoi(spec.substr(pos + field.size() + 1));
}

} // namespace detail

// Universe specs: "empty", "ksubsets:n=6,k=3", "treepairs:depth=3".
// Search specs: "record", "both-colors", "mono:m=3".
inline ColoringExperiment color_experiment(const std::string& universe_spec, int colors,
                                           const std::function<int(const ExperimentElement&)>& coloring,
                                           const std::string& search_spec) {
    ColoringExperiment exp;
    exp.universe = universe_spec;
    exp.search = search_spec;
    exp.colors = colors;
    std::vector<ExperimentElement> universe;
    if (universe_spec == "empty") {
        // vacuous
    } else if (universe_spec.rfind("ksubsets", 0) == 0) {
        int n = detail::parse_int_field(universe_spec, "n");
        int k = detail::parse_int_field(universe_spec, "k");
        for (auto& s : subsets_of(n, k)) universe.push_back(std::move(s));
        exp.budget = universe.size();
    } else if (universe_spec.rfind("treepairs", 0) == 0) {
        int depth = detail::parse_int_field(universe_spec, "depth");
        LevelTree t = full_binary_tree((std::size_t)depth);
        const auto& nodes = t.nodes();
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                universe.push_back(std::make_pair(nodes[i], nodes[j]));
        exp.budget = universe.size();
    } else {
        throw unknown_universe("unsupported universe \"" + universe_spec + "\"");
    }
    std::vector<int> colors_seen;
    for (const ExperimentElement& e : universe) {
        int c = coloring(e);
        exp.assignment.emplace_back(detail::element_repr(e), c);
        colors_seen.push_back(c);
    }
    if (search_spec == "record") {
        exp.found = true;
        exp.result = universe.empty() ? "vacuous: empty universe" : "assignment recorded";
    } else if (search_spec == "both-colors") {
        bool c0 = false, c1 = false;
        for (int c : colors_seen) (c ? c1 : c0) = true;
        exp.found = c0 && c1;
        exp.result = exp.found ? "both colors present"
                               : universe.empty() ? "vacuous: empty universe" : "one color only";
    } else if (search_spec.rfind("mono", 0) == 0) {
        if (universe_spec.rfind("ksubsets", 0) != 0)
            throw unknown_universe("monochromatic subset search needs a k-subset universe");
        int n = detail::parse_int_field(universe_spec, "n");
        int k = detail::parse_int_field(universe_spec, "k");
        int m = detail::parse_int_field(search_spec, "m");
        detail::RamseyInstance inst(n, k, 1, m);
        for (const auto& slots : inst.msubset_slots) {
            bool mono = true;
            for (int s : slots)
                if (colors_seen[s] != colors_seen[slots[0]]) {
                    mono = false;
                    break;
                }
            if (mono) {
                exp.found = true;
                std::ostringstream os;
                os << "monochromatic " << m << "-set in color " << colors_seen[slots[0]];
                exp.result = os.str();
                break;
            }
        }
        if (!exp.found) exp.result = "no monochromatic subset";
    } else {
        throw unknown_universe("unsupported search \"" + search_spec + "\"");
    }
    return exp;
}

} // namespace rct
