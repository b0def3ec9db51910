#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rct/types_enum.hpp"

using namespace rct;

TEST_CASE("single-vertex antichains are the coding nodes") {
    CodingTree host = rado_tree(5);
    auto chains = graph_to_antichains(FiniteGraph::make(1, {}), host, 5);
    CHECK(chains.size() == 5);
}

TEST_CASE("edge antichains match a pair scan") {
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    for (int depth : {4, 9}) {
        CodingTree host = rado_tree(depth);
        auto chains = graph_to_antichains(edge, host, depth);
        // oracle: direct pair scan
        std::set<std::pair<int, int>> expected;
        for (int m = 0; m < depth; ++m)
            for (int n = m + 1; n < depth; ++n) {
                const BitSeq &cm = host.coding_node(m), &cn = host.coding_node(n);
                if (cm.comparable_with(cn)) continue;
                if (cn.bit(cm.size()) == 1) expected.insert({m, n});
            }
        std::set<std::pair<int, int>> got;
        for (const auto& chain : chains) {
            got.insert({*host.coding_index_of(chain[0]), *host.coding_index_of(chain[1])});
        }
        CHECK(got == expected);
        if (depth == 4) CHECK(chains.empty()); // all passing-1 pairs are comparable this early
        if (depth == 9) CHECK_FALSE(chains.empty());
    }
}

TEST_CASE("triangles cannot be coded by a triangle-free host") {
    CodingTree host = strong_kfree_spine(3, 8);
    FiniteGraph triangle = FiniteGraph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(graph_to_antichains(triangle, host, 8).empty());
}

TEST_CASE("depth precondition enforced") {
    CodingTree host = rado_tree(4);
    CHECK_THROWS_AS(graph_to_antichains(FiniteGraph::make(1, {}), host, 5), length_error);
}

TEST_CASE("one type of single vertices in the rado host") {
    CodingTree host = rado_tree(6);
    TypeEnumeration e = enumerate_types(FiniteGraph::make(1, {}), host, SimMode::strong, 6);
    CHECK(e.count == 1);
    // brute-force: all singleton chains are pairwise strongly similar
    auto chains = graph_to_antichains(FiniteGraph::make(1, {}), host, 6);
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j) {
            NodeSet A = NodeSet::close(chains[i], &host), B = NodeSet::close(chains[j], &host);
            CHECK(oracle::similarity_map_exists(A.nodes, A.coding, B.nodes, B.coding));
        }
}

TEST_CASE("types never disappear as depth grows") {
    CodingTree host = rado_tree(12);
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    std::set<std::string> prev;
    for (int d = 2; d <= 12; ++d) {
        TypeEnumeration e = enumerate_types(edge, host, SimMode::strong, d);
        std::set<std::string> now;
        for (const SimilarityType& t : e.types) now.insert(t.key());
        for (const std::string& t : prev) CHECK(now.count(t));
        prev = now;
    }
}

TEST_CASE("similar antichains decode to the same ordered graph") {
    CodingTree host = rado_tree(12);
    std::vector<std::vector<BitSeq>> chains;
    for (const FiniteGraph& g :
         {FiniteGraph::make(2, {{0, 1}}), FiniteGraph::make(2, {}),
          FiniteGraph::make(3, {{0, 1}})}) {
        auto found = graph_to_antichains(g, host, 12);
        chains.insert(chains.end(), found.begin(), found.end());
    }
    int related = 0;
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j) {
            if (strong_similarity_map(chains[i], chains[j], &host).has_value()) {
                CHECK(decode_graph(chains[i]) == decode_graph(chains[j]));
                ++related;
            }
        }
    CHECK(related > 0);
}

TEST_CASE("antichains of one type decode identically") {
    CodingTree host = rado_tree(12);
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    std::map<std::string, FiniteGraph> decode_by_type;
    for (const auto& chain : graph_to_antichains(edge, host, 12)) {
        SimilarityType t = canonical_type(chain, SimMode::strong, &host);
        FiniteGraph g = decode_graph(chain);
        auto it = decode_by_type.find(t.key());
        if (it == decode_by_type.end())
            decode_by_type.emplace(t.key(), g);
        else
            CHECK(it->second == g);
    }
    CHECK_FALSE(decode_by_type.empty());
}

TEST_CASE("edge types in the rado host reach two and saturate") {
    CodingTree host = rado_tree(12);
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    TypeEnumeration e = enumerate_types(edge, host, SimMode::strong, 12);
    CHECK(e.count >= 2);
    CHECK(e.saturated);
    CHECK_FALSE(e.grew_last_step);
}

TEST_CASE("strict edge types in the skew triangle-free host") {
    CodingTree host = skew_kfree_spine(3, 10);
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    TypeEnumeration e = enumerate_types(edge, host, SimMode::strict, 10);
    CHECK(e.count >= 2);
    CHECK(e.saturated);
}

TEST_CASE("shallow depths neither crash nor claim saturation") {
    CodingTree host = rado_tree(3);
    FiniteGraph edge = FiniteGraph::make(2, {{0, 1}});
    TypeEnumeration e0 = enumerate_types(edge, host, SimMode::strong, 0);
    CHECK(e0.count == 0);
    CHECK_FALSE(e0.saturated);
    TypeEnumeration e1 = enumerate_types(edge, host, SimMode::strong, 1);
    CHECK(e1.count == 0);
    CHECK_FALSE(e1.saturated);
}

TEST_CASE("devlin pair types") {
    DevlinTypes d = devlin_pair_types();
    CHECK(d.types.size() == 2);
    REQUIRE(d.witnesses.size() == 2);
    for (const auto& w : d.witnesses) {
        CHECK(w[0].size() < w[1].size());
        CHECK_FALSE(w[0].comparable_with(w[1]));
        CHECK(w[1].bit(w[0].size()) == 0);
        CHECK(w[0].size() <= 4);
        CHECK(w[1].size() <= 4);
    }
    // witnesses of different types are not related by any similarity map
    NodeSet A = NodeSet::close({d.witnesses[0][0], d.witnesses[0][1]});
    NodeSet B = NodeSet::close({d.witnesses[1][0], d.witnesses[1][1]});
    CHECK_FALSE(oracle::similarity_map_exists(A.nodes, A.coding, B.nodes, B.coding));
    CHECK_FALSE(strong_similarity_map(A, B).has_value());
}
