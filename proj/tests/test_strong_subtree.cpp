#include <doctest.h>

#include "oracles.hpp"
#include "rct/strong_subtree.hpp"

using namespace rct;

TEST_CASE("one-strong subtrees are single nodes") {
    LevelTree t = full_binary_tree(3);
    auto subs = enumerate_strong_subtrees(t, 1, std::vector<std::size_t>{2});
    CHECK(subs.size() == 4);
    for (const auto& s : subs) {
        CHECK(s.height() == 1);
        CHECK(s.level_sets[0].size() == 1);
        CHECK(is_strong_subtree(t, s));
    }
}

TEST_CASE("two-strong subtrees of the full height-3 tree") {
    LevelTree t = full_binary_tree(3);

    // frozen from the subset-enumeration oracle: 1 for {0,1}, 4 for {0,2}, 2 for {1,2}
    CHECK(oracle::count_strong_subtrees_by_subsets(t, 2) == 7);

    auto via_map01 = enumerate_strong_subtrees(t, 2, std::vector<std::size_t>{0, 1});
    CHECK(via_map01.size() == 1);
    CHECK(via_map01[0].level_sets[0][0] == BitSeq());
    CHECK(via_map01[0].level_sets[1] ==
          std::vector<BitSeq>{BitSeq::of("0"), BitSeq::of("1")});

    CHECK(enumerate_strong_subtrees(t, 2, std::vector<std::size_t>{0, 2}).size() == 4);
    CHECK(enumerate_strong_subtrees(t, 2, std::vector<std::size_t>{1, 2}).size() == 2);

    auto all = enumerate_strong_subtrees(t, 2);
    CHECK(all.size() == 7);
    for (const auto& s : all) {
        CHECK(is_strong_subtree(t, s));
        CHECK(oracle::is_strong_subtree_subset(t, s.all_nodes(), s.level_map));
    }
}

TEST_CASE("counts match the subset oracle on a height-4 host") {
    LevelTree t = full_binary_tree(4);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto enumerated = enumerate_strong_subtrees(t, k);
        CHECK(enumerated.size() == oracle::count_strong_subtrees_by_subsets(t, k));
        for (const auto& s : enumerated) CHECK(is_strong_subtree(t, s));
    }
}

TEST_CASE("counts match the subset oracle on a pruned host") {
    // kill the branch above "11"
    LevelTree full = full_binary_tree(3);
    std::vector<BitSeq> nodes;
    for (const BitSeq& n : full.nodes())
        if (!BitSeq::of("11").is_prefix_of(n)) nodes.push_back(n);
    LevelTree t = LevelTree::from_parts(nodes, {0, 1, 2});
    for (std::size_t k = 1; k <= 3; ++k) {
        auto enumerated = enumerate_strong_subtrees(t, k);
        CHECK(enumerated.size() == oracle::count_strong_subtrees_by_subsets(t, k));
        for (const auto& s : enumerated) CHECK(is_strong_subtree(t, s));
    }
}

TEST_CASE("deterministic enumeration order") {
    LevelTree t = full_binary_tree(3);
    auto a = enumerate_strong_subtrees(t, 2);
    auto b = enumerate_strong_subtrees(t, 2);
    CHECK(a == b);
    // level maps ascend lexicographically
    REQUIRE(a.size() == 7);
    CHECK(a[0].level_map == std::vector<std::size_t>{0, 1});
    CHECK(a[1].level_map == std::vector<std::size_t>{0, 2});
    CHECK(a[5].level_map == std::vector<std::size_t>{1, 2});
}
