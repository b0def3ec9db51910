#pragma once

#include <string>
#include <vector>

#include "rct/coding_tree.hpp"

namespace rct {

// K_k-free branching criterion, 1-side: the extension t^1 must stay out of
// the tree exactly when the vertices it passes through (coding nodes of
// length <= |t|, pseudo included) already contain a (k-1)-clique, since a
// coding node through t^1 would then complete a k-clique.
inline bool forbidden_one_extension(const CodingTree& host, const BitSeq& t, int k) {
    if (host.kind != TreeKind::henson)
        throw kind_mismatch("branching criterion applies to K_k-free hosts only");
    if (host.k != k)
        throw kind_mismatch("tree was built with k=" + std::to_string(host.k) +
                            ", checked with k=" + std::to_string(k));
    if (!host.spine && !host.tree.contains(t))
        throw invariant_violation("node \"" + t.str() + "\" not in the host tree");
    FiniteGraph g = host.decode(true);
    std::uint64_t passing = 0;
    for (std::size_t p = 0; p < host.coding.size(); ++p) {
        std::size_t len = host.coding[p].size();
        if (len > t.size()) break;
        int bit = len == t.size() ? 1 : t.bit(len);
        if (bit == 1) passing |= std::uint64_t(1) << p;
    }
    return has_clique_within(g, passing, k - 1);
}

struct FbcViolation {
    BitSeq node;
    std::string reason;
};

struct FbcReport {
    bool ok = true;
    std::vector<FbcViolation> violations;
};

// Check the branching criterion on every node below the top level: the
// 0-extension always continues, and a 1-side successor exists exactly when
// the criterion permits it. Skew trees delay their splits across levels and
// are not covered by this per-level check.
inline FbcReport check_kfbc(const CodingTree& host, int k) {
    if (host.kind != TreeKind::henson)
        throw kind_mismatch("branching criterion applies to K_k-free hosts only");
    if (host.k != k)
        throw kind_mismatch("tree was built with k=" + std::to_string(host.k) +
                            ", checked with k=" + std::to_string(k));
    if (host.skew)
        throw kind_mismatch("per-level branching check does not apply to skew trees");
    if (host.spine) throw kind_mismatch("branching check needs a materialized tree");
    FbcReport report;
    auto flag = [&](const BitSeq& node, std::string reason) {
        report.ok = false;
        report.violations.push_back({node, std::move(reason)});
    };
    for (std::size_t h = 0; h + 1 < host.tree.level_count(); ++h) {
        for (const BitSeq& t : host.tree.at_height(h)) {
            bool have0 = false, have1 = false;
            for (const BitSeq& u : host.tree.succ(t)) {
                if (u.bit(t.size()) == 0)
                    have0 = true;
                else
                    have1 = true;
            }
            if (!have0) flag(t, "0-extension has no successor at the next level");
            bool forbidden = forbidden_one_extension(host, t, k);
            if (have1 && forbidden) flag(t, "forbidden 1-extension is present");
            if (!have1 && !forbidden) flag(t, "admissible 1-extension is missing");
        }
    }
    return report;
}

} // namespace rct
