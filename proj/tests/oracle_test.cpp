#include "doctest.h"
#include "test_util.hpp"

#include "cactus/oracle.hpp"
#include "cactus/selection.hpp"

using namespace cactus;
namespace tu = cactus::testutil;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("shortest paths on fixed graphs") {
    Graph k2 = Graph::from_edges(2, {{0, 1}}, {7});
    CHECK(oracle::sssp(k2, 0).dist[1] == 7);
    Graph c4 = tu::make_cycle(4);
    CHECK(oracle::sssp(c4, 0).dist[2] == 2);
}

TEST_CASE("longest simple paths on fixed graphs") {
    Graph c4 = tu::make_cycle(4);
    auto ld = oracle::longest(c4, 0);
    CHECK(ld.ldist[1] == 3);
    CHECK(ld.ldist[2] == 2);

    Graph path = tu::make_path(5);
    auto d = oracle::sssp(path, 0);
    auto l = oracle::longest(path, 0);
    CHECK(d.dist == l.ldist); // unique paths in a tree

    CHECK_THROWS_AS(oracle::longest(tu::make_cycle(13), 0), GraphError);
}

TEST_CASE("minimum subsets enumerate in lexicographic order") {
    Graph star = tu::make_star(3);
    auto d = oracle::min_subset(star, dominates);
    CHECK(d.objective == 1);
    CHECK(d.members == std::vector<Vertex>{0});

    auto c6 = tu::make_cycle(6);
    auto dom = oracle::min_subset(c6, dominates);
    CHECK(dom.objective == 2);
    CHECK(dom.members == std::vector<Vertex>{0, 3}); // lexicographically first

    CHECK_THROWS_AS(oracle::min_subset(tu::make_cycle(19), dominates), GraphError);
}

TEST_CASE("weighted minimum subsets") {
    Graph tri = tu::with_vertex_weights(tu::make_cycle(3), {1, 2, 3});
    auto fvs = oracle::min_weight_subset(tri, remainder_is_forest);
    CHECK(fvs.objective == 1);
    CHECK(fvs.members == std::vector<Vertex>{0});
    CHECK_THROWS_AS(oracle::min_weight_subset(tu::make_cycle(15), remainder_is_forest),
                    GraphError);
}

TEST_CASE("maximum independent sets") {
    CHECK(oracle::max_independent(tu::make_cycle(5)).objective == 2);
    CHECK(oracle::max_independent(tu::make_star(4)).objective == 4);
    auto w = oracle::max_independent(tu::make_cycle(6));
    CHECK(w.objective == 3);
    CHECK(w.members == std::vector<Vertex>{0, 2, 4});
    CHECK_THROWS_AS(oracle::max_independent(tu::make_cycle(19)), GraphError);
}

TEST_CASE("maximum 2-independent sets") {
    CHECK(oracle::max_2_independent(tu::make_cycle(5)).objective == 4);
    CHECK(oracle::max_2_independent(tu::make_cycle(6)).objective == 6);
    auto tp = oracle::max_2_independent(tu::make_two_cycles(3, 3));
    CHECK(tp.objective == 4);
    CHECK(is_valid_two_partition(tu::make_two_cycles(3, 3), tp));
}

TEST_CASE("exact spans on closed-form families") {
    CHECK(oracle::span(tu::make_cycle(5), LabelScheme::l21) == 4);
    CHECK(oracle::span(tu::make_star(4), LabelScheme::l01) == 3);
    CHECK(oracle::span(tu::make_cycle(6), LabelScheme::t21) == 4);
    CHECK_THROWS_AS(oracle::span(tu::make_cycle(11), LabelScheme::l21), GraphError);
}

TEST_CASE("spanning tree enumeration matches the cycle-length product") {
    long long count = 0;
    oracle::enumerate_spanning_trees(tu::make_cycle(6), [&](const std::vector<int>& del) {
        CHECK(del.size() == 1);
        ++count;
    });
    CHECK(count == 6);

    count = 0;
    oracle::enumerate_spanning_trees(tu::make_path(4), [&](const std::vector<int>& del) {
        CHECK(del.empty());
        ++count;
    });
    CHECK(count == 1);

    count = 0;
    oracle::enumerate_spanning_trees(tu::make_two_cycles(3, 3),
                                     [&](const std::vector<int>&) { ++count; });
    CHECK(count == 9);
    CHECK(oracle::spanning_tree_product(tu::make_two_cycles(3, 3)) == 9);
    CHECK(oracle::count_spanning_trees_kirchhoff(tu::make_two_cycles(3, 3)) == 9);
}

TEST_CASE("kirchhoff count agrees with the product on the corpus") {
    for (const Graph& g : tu::corpus(30, 40, 2024)) {
        CHECK(oracle::count_spanning_trees_kirchhoff(g) == oracle::spanning_tree_product(g));
    }
}

TEST_SUITE_END();
