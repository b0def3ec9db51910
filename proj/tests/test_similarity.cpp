#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "rct/builders.hpp"
#include "rct/similarity.hpp"

using namespace rct;

namespace {

std::vector<BitSeq> all_up_to(std::size_t max_len) {
    std::vector<BitSeq> out;
    for (std::size_t l = 0; l <= max_len; ++l)
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << l); ++m)
            out.push_back(BitSeq::from_mask(m, l));
    return out;
}

bool is_meet_closed(const std::vector<BitSeq>& s) {
    for (const BitSeq& a : s)
        for (const BitSeq& b : s) {
            BitSeq m = meet(a, b);
            bool in = false;
            for (const BitSeq& c : s)
                if (c == m) in = true;
            if (!in) return false;
        }
    return true;
}

} // namespace

TEST_CASE("meet closure adds exactly the pairwise meets") {
    auto closed = meet_closure({BitSeq::of("001"), BitSeq::of("01"), BitSeq::of("1")});
    CHECK(is_meet_closed(closed));
    CHECK(closed.size() == 5); // adds "0" and the root
}

TEST_CASE("identity map on a set and itself") {
    std::vector<BitSeq> s = {BitSeq::of("0"), BitSeq::of("1"), BitSeq()};
    auto map = strong_similarity_map(s, s);
    REQUIRE(map.has_value());
    for (const auto& [a, b] : *map) CHECK(a == b);
}

TEST_CASE("level-shift bijection between sibling pairs") {
    std::vector<BitSeq> S = {BitSeq::of("0"), BitSeq::of("1")};
    std::vector<BitSeq> T = {BitSeq::of("00"), BitSeq::of("01")};
    auto map = strong_similarity_map(S, T);
    REQUIRE(map.has_value());

    // brute force over all 3! bijections of the closures: exactly one works
    NodeSet A = NodeSet::close(S), B = NodeSet::close(T);
    int valid = 0;
    std::vector<std::size_t> perm = {0, 1, 2};
    do {
        std::vector<std::size_t> m(3);
        for (std::size_t i = 0; i < 3; ++i) m[i] = perm[i];
        if (detail::verify_similarity_conditions(A, B, m)) ++valid;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid == 1);
    CHECK(oracle::similarity_map_exists(A.nodes, A.coding, B.nodes, B.coding));
}

TEST_CASE("passing numbers at coding nodes separate sets") {
    CodingTree host;
    host.tree = full_binary_tree(3);
    host.coding = {BitSeq::of("1")};
    host.kind = TreeKind::henson;
    host.k = 3;
    // both sets contain the coding node and one longer node; passing differs
    std::vector<BitSeq> S = {BitSeq::of("1"), BitSeq::of("11")};
    std::vector<BitSeq> T = {BitSeq::of("1"), BitSeq::of("10")};
    CHECK_FALSE(strong_similarity_map(S, T, &host).has_value());
    CHECK(strong_similarity_map(S, S, &host).has_value());
    CHECK(canonical_type(S, SimMode::strong, &host) != canonical_type(T, SimMode::strong, &host));
}

TEST_CASE("singletons share one type") {
    SimilarityType t1 = canonical_type({BitSeq::of("0")}, SimMode::strong);
    SimilarityType t2 = canonical_type({BitSeq::of("1101")}, SimMode::strong);
    SimilarityType t3 = canonical_type({BitSeq()}, SimMode::strong);
    CHECK(t1 == t2);
    CHECK(t1 == t3);
}

TEST_CASE("the two pair configurations have distinct types") {
    // shorter node on the 0 side of the meet vs on the 1 side
    SimilarityType left = canonical_type({BitSeq::of("0"), BitSeq::of("101")}, SimMode::strong);
    SimilarityType right = canonical_type({BitSeq::of("001"), BitSeq::of("1")}, SimMode::strong);
    CHECK(left != right);
    auto map =
        strong_similarity_map({BitSeq::of("0"), BitSeq::of("101")},
                              {BitSeq::of("001"), BitSeq::of("1")});
    CHECK_FALSE(map.has_value());
}

TEST_CASE("types are invariant under deeper re-embedding") {
    std::vector<BitSeq> S = {BitSeq::of("0"), BitSeq::of("10")};
    std::vector<BitSeq> T; // image under prefixing with "1"
    for (const BitSeq& s : S) T.push_back(BitSeq("1" + s.str()));
    CHECK(canonical_type(S, SimMode::strong) == canonical_type(T, SimMode::strong));
    CHECK(strong_similarity_map(S, T).has_value());
}

TEST_CASE("a set and its map image share a type") {
    std::vector<BitSeq> S = {BitSeq::of("00"), BitSeq::of("010")};
    std::vector<BitSeq> T = {BitSeq::of("10"), BitSeq::of("110")};
    auto map = strong_similarity_map(S, T);
    if (map) CHECK(canonical_type(S, SimMode::strong) == canonical_type(T, SimMode::strong));
}

TEST_CASE("canonicalization agrees with the map search on small sets") {
    // all meet-closed subsets of <= 3 nodes within depth 3
    std::vector<BitSeq> universe = all_up_to(3);
    std::vector<std::vector<BitSeq>> sets;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        sets.push_back({universe[i]});
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            std::vector<BitSeq> s = {universe[i], universe[j]};
            if (is_meet_closed(s)) sets.push_back(s);
            for (std::size_t l = j + 1; l < universe.size(); ++l) {
                std::vector<BitSeq> s3 = {universe[i], universe[j], universe[l]};
                if (is_meet_closed(s3)) sets.push_back(s3);
            }
        }
    }
    std::vector<SimilarityType> types;
    for (const auto& s : sets) types.push_back(canonical_type(s, SimMode::strong));
    int checked = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i].size() != sets[j].size()) continue;
            NodeSet A = NodeSet::close(sets[i]), B = NodeSet::close(sets[j]);
            bool oracle_says =
                oracle::similarity_map_exists(A.nodes, A.coding, B.nodes, B.coding);
            bool canon_says = types[i] == types[j];
            bool map_says = strong_similarity_map(A, B).has_value();
            CHECK(oracle_says == canon_says);
            CHECK(oracle_says == map_says);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("canonicalization matches the map search on sampled five-node sets") {
    std::mt19937 rng(5150);
    std::vector<BitSeq> universe = all_up_to(5);
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    std::vector<NodeSet> sets;
    while (sets.size() < 400) {
        std::vector<BitSeq> raw = {universe[pick(rng)], universe[pick(rng)], universe[pick(rng)]};
        NodeSet s = NodeSet::close(raw); // closure of 3 nodes has up to 5 members
        if (s.size() >= 4) sets.push_back(std::move(s));
    }
    int agreements = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i].size() != sets[j].size()) continue;
            bool canon = canonical_type(sets[i].nodes, SimMode::strong) ==
                         canonical_type(sets[j].nodes, SimMode::strong);
            bool oracle = oracle::similarity_map_exists(sets[i].nodes, sets[i].coding,
                                                        sets[j].nodes, sets[j].coding);
            bool mapped = strong_similarity_map(sets[i], sets[j]).has_value();
            CHECK(canon == oracle);
            CHECK(mapped == oracle);
            ++agreements;
        }
    CHECK(agreements > 10000);
}

TEST_CASE("strict mode needs a clique-bounded host") {
    CHECK_THROWS_AS(canonical_type({BitSeq::of("0")}, SimMode::strict), kind_mismatch);
    CodingTree rado = rado_spine(3);
    CHECK_THROWS_AS(canonical_type({BitSeq::of("0")}, SimMode::strict, &rado), kind_mismatch);
    CodingTree host = strong_kfree_spine(3, 4);
    SimilarityType t = canonical_type({host.coding_node(0), host.coding_node(1)}, SimMode::strict,
                                      &host);
    CHECK(t.strict_trace.has_value());
}
