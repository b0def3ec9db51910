#include <doctest.h>

#include <random>

#include "rct/level_tree.hpp"

using namespace rct;

TEST_CASE("closure forced from leaves") {
    auto r = make_level_tree({BitSeq::of("00"), BitSeq::of("11")}, {0, 1, 2});
    CHECK_FALSE(r.was_closed);
    CHECK(r.tree.nodes().size() == 5); // root, 0, 1, 00, 11
    CHECK(r.tree.contains(BitSeq()));
    CHECK(r.tree.contains(BitSeq::of("0")));
    CHECK(r.tree.contains(BitSeq::of("1")));
}

TEST_CASE("singleton root tree") {
    auto r = make_level_tree({BitSeq()}, {0});
    CHECK(r.was_closed);
    CHECK(r.tree.nodes().size() == 1);
    CHECK(r.tree.level_count() == 1);
}

TEST_CASE("closure with the root level absent") {
    auto r = make_level_tree({BitSeq::of("01")}, {1, 2});
    CHECK(r.tree.nodes().size() == 2);
    CHECK(r.tree.contains(BitSeq::of("0")));
    CHECK(r.tree.contains(BitSeq::of("01")));
    CHECK_FALSE(r.tree.contains(BitSeq()));
}

TEST_CASE("level mismatch rejected") {
    CHECK_THROWS_AS(make_level_tree({BitSeq::of("01")}, {0, 1}), level_mismatch);
}

TEST_CASE("closure invariant on random inputs") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> levels;
        for (std::size_t l = 0; l <= 5; ++l)
            if (coin(rng)) levels.push_back(l);
        if (levels.empty()) levels.push_back(0);
        std::vector<BitSeq> nodes;
        std::uniform_int_distribution<std::size_t> pick_level(0, levels.size() - 1);
        for (int i = 0; i < 6; ++i) {
            std::size_t len = levels[pick_level(rng)];
            std::string s;
            for (std::size_t b = 0; b < len; ++b) s.push_back(coin(rng) ? '1' : '0');
            nodes.push_back(BitSeq(s));
        }
        auto r = make_level_tree(nodes, levels);
        CHECK(r.tree.closure_holds());
        // idempotence: closing a closed tree changes nothing
        auto again = make_level_tree(r.tree.nodes(), r.tree.levels());
        CHECK(again.was_closed);
        CHECK(again.tree == r.tree);
    }
}

TEST_CASE("heights equal containment-chain lengths") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> levels;
        for (std::size_t l = 0; l <= 5; ++l)
            if (coin(rng)) levels.push_back(l);
        if (levels.empty()) levels.push_back(0);
        std::vector<BitSeq> seeds;
        std::uniform_int_distribution<std::size_t> pick_level(0, levels.size() - 1);
        for (int i = 0; i < 5; ++i) {
            std::size_t len = levels[pick_level(rng)];
            std::string s;
            for (std::size_t b = 0; b < len; ++b) s.push_back(coin(rng) ? '1' : '0');
            seeds.push_back(BitSeq(s));
        }
        LevelTree t = make_level_tree(seeds, levels).tree;
        for (const BitSeq& node : t.nodes()) {
            std::size_t chain = 0;
            for (const BitSeq& other : t.nodes())
                if (other.size() < node.size() && other.is_prefix_of(node)) ++chain;
            CHECK(t.height_of(node) == chain);
        }
    }
}

TEST_CASE("heights and successors") {
    LevelTree t = full_binary_tree(3);
    CHECK(t.level_count() == 3);
    CHECK(t.at_height(2).size() == 4);
    CHECK(t.height_of(BitSeq::of("10")) == 2);
    auto s = t.succ(BitSeq::of("0"));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == BitSeq::of("00"));
    CHECK(s[1] == BitSeq::of("01"));
    CHECK(t.succ(BitSeq::of("00")).empty()); // top level
}

TEST_CASE("successor markers with level gaps") {
    // levels 0 and 2 only: markers still read off the deeper level
    auto r = make_level_tree({BitSeq::of("00"), BitSeq::of("11")}, {0, 2});
    auto s = r.tree.succ(BitSeq());
    REQUIRE(s.size() == 2);
    CHECK(s[0] == BitSeq::of("0"));
    CHECK(s[1] == BitSeq::of("1"));
}
