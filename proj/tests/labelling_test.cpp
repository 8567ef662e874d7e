#include "doctest.h"
#include "test_util.hpp"

#include "cactus/labelling.hpp"
#include "cactus/oracle.hpp"

using namespace cactus;
namespace tu = cactus::testutil;

namespace {

// disjoint union on a shared id space (for span oracles only; such graphs
// are intentionally disconnected)
Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<Vertex, Vertex>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph join_graphs(const Graph& a, const Graph& b) {
    std::vector<std::pair<Vertex, Vertex>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    for (Vertex u = 0; u < a.vertex_count(); ++u)
        for (Vertex v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + a.vertex_count());
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

} // namespace

TEST_SUITE_BEGIN("labelling");

TEST_CASE("validators accept and reject fixed labellings") {
    Graph c3 = tu::make_cycle(3);
    CHECK(validate_l21(c3, {{0, 2, 4}, 4}).empty());

    Graph k2 = tu::make_path(2);
    auto violations = validate_l21(k2, {{0, 1}, 1});
    CHECK(violations.size() == 1);

    CHECK_THROWS_AS(validate_l21(c3, {{0, 2}, 2}), GraphError);

    // L(0,1): adjacency alone imposes nothing, a shared neighbor does
    CHECK(validate_l01(k2, {{0, 0}, 0}).empty());
    Graph p3 = tu::make_path(3);
    CHECK(validate_l01(p3, {{0, 0, 0}, 0}).size() == 1);
    CHECK(validate_l01(p3, {{0, 0, 1}, 1}).empty());
}

TEST_CASE("total labelling validator checks all three conditions") {
    Graph k2 = tu::make_path(2);
    CHECK(validate_t21(k2, {{0, 1}, {3}, 3}).empty());
    CHECK(validate_t21(k2, {{0, 0}, {3}, 3}).size() == 1); // equal endpoints
    CHECK(validate_t21(k2, {{0, 1}, {2}, 2}).size() == 1); // |1-2| < 2
    Graph p3 = tu::make_path(3);
    CHECK(validate_t21(p3, {{0, 4, 0}, {2, 2}, 4}).size() == 1); // equal edges at the middle
}

TEST_CASE("constructed labellings are valid across the corpus") {
    GenSpec spec;
    spec.max_cycle_len = 9;
    for (const Graph& g : tu::corpus(60, 120, 246)) {
        BlockCutTree t = decompose(g);
        int delta = max_degree(g);
        LabellingStats st21, stt;
        auto a = label_l21(g, t, &st21);
        CHECK(validate_l21(g, a).empty());
        CHECK(a.span <= delta + 3);
        auto b = label_l01(g, t);
        CHECK(validate_l01(g, b).empty());
        CHECK(b.span <= delta);
        auto c = label_t21(g, t, &stt);
        CHECK(validate_t21(g, c).empty());
        CHECK(c.span <= delta + 2);
        CHECK(st21.repair_blocks == 0);
        CHECK(stt.repair_blocks == 0);
    }
}

TEST_CASE("constructed labellings stay valid on a large instance") {
    GenSpec spec;
    spec.block_count = 4200; // about 10^4 vertices
    spec.seed = 9;
    spec.max_cycle_len = 8;
    Graph g = random_cactus(spec);
    REQUIRE(g.vertex_count() >= 9000);
    BlockCutTree t = decompose(g);
    int delta = max_degree(g);
    auto a = label_l21(g, t);
    CHECK(validate_l21(g, a).empty());
    CHECK(a.span <= delta + 3);
    auto b = label_l01(g, t);
    CHECK(validate_l01(g, b).empty());
    CHECK(b.span <= delta);
    auto c = label_t21(g, t);
    CHECK(validate_t21(g, c).empty());
    CHECK(c.span <= delta + 2);
}

TEST_CASE("L(2,1) closed forms: cycles, stars, two-cycle joins") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = tu::make_cycle(n);
        auto lab = label_l21(g, decompose(g));
        CHECK(validate_l21(g, lab).empty());
        CHECK(lab.span == 4);
    }
    for (int d = 2; d <= 8; ++d) {
        Graph g = tu::make_star(d);
        auto lab = label_l21(g, decompose(g));
        CHECK(validate_l21(g, lab).empty());
        CHECK(lab.span == d + 1);
    }
    for (int a = 3; a <= 8; ++a)
        for (int b = a; b <= 8; ++b) {
            Graph g = tu::make_two_cycles(a, b);
            auto lab = label_l21(g, decompose(g));
            CHECK(validate_l21(g, lab).empty());
            CHECK(lab.span == 5);
        }
}

TEST_CASE("L(2,1) oracle spans on closed-form families") {
    for (int n = 3; n <= 10; ++n) CHECK(oracle::span(tu::make_cycle(n), LabelScheme::l21) == 4);
    for (int d = 2; d <= 8; ++d)
        CHECK(oracle::span(tu::make_star(d), LabelScheme::l21) == d + 1);
    for (int a = 3; a <= 5; ++a)
        for (int b = a; b <= 11 - a; ++b)
            CHECK(oracle::span(tu::make_two_cycles(a, b), LabelScheme::l21) == 5);
}

TEST_CASE("L(0,1) closed forms") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = tu::make_cycle(n);
        auto lab = label_l01(g, decompose(g));
        CHECK(validate_l01(g, lab).empty());
        CHECK(lab.span == (n % 4 == 0 ? 1 : 2));
        if (n <= 10) CHECK(oracle::span(g, LabelScheme::l01) == (n % 4 == 0 ? 1 : 2));
    }
    for (int d = 2; d <= 8; ++d) {
        Graph g = tu::make_star(d);
        auto lab = label_l01(g, decompose(g));
        CHECK(validate_l01(g, lab).empty());
        CHECK(lab.span == d - 1);
        if (d <= 8) CHECK(oracle::span(g, LabelScheme::l01) == d - 1);
    }
    for (int n = 3; n <= 8; ++n) {
        Graph g = tu::make_sun(n);
        auto lab = label_l01(g, decompose(g));
        CHECK(validate_l01(g, lab).empty());
        CHECK(lab.span == 2);
        if (2 * n <= 10) CHECK(oracle::span(g, LabelScheme::l01) == 2);
    }
}

TEST_CASE("(2,1)-total closed forms") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = tu::make_cycle(n);
        auto lab = label_t21(g, decompose(g));
        CHECK(validate_t21(g, lab).empty());
        CHECK(lab.span == 4);
        if (n <= 10) CHECK(oracle::span(g, LabelScheme::t21) == 4);
    }
    // the star optimum is delta + 2 only for delta <= 2; a valid span
    // delta+1 labelling exists from delta = 3 on (label reuse on leaves)
    CHECK(oracle::span(tu::make_star(2), LabelScheme::t21) == 4);
    CHECK(oracle::span(tu::make_star(3), LabelScheme::t21) == 4);
    CHECK(oracle::span(tu::make_star(4), LabelScheme::t21) == 5);
    for (int d = 2; d <= 8; ++d) {
        Graph g = tu::make_star(d);
        auto lab = label_t21(g, decompose(g));
        CHECK(validate_t21(g, lab).empty());
        CHECK(lab.span <= d + 2);
    }
    for (int n = 3; n <= 5; ++n) {
        Graph g = tu::make_sun(n);
        auto lab = label_t21(g, decompose(g));
        CHECK(validate_t21(g, lab).empty());
        CHECK(lab.span <= 5); // delta + 2
        CHECK(oracle::span(g, LabelScheme::t21) == 5);
    }
}

TEST_CASE("span bounds hold for oracle optima on the random corpus") {
    for (const Graph& g : tu::corpus(60, 10, 33000)) {
        int delta = max_degree(g);
        int l21 = oracle::span(g, LabelScheme::l21);
        CHECK(l21 >= delta + 1);
        CHECK(l21 <= delta + 3);
        int l01 = oracle::span(g, LabelScheme::l01);
        CHECK(l01 >= delta - 1);
        CHECK(l01 <= delta);
        int t21 = oracle::span(g, LabelScheme::t21);
        CHECK(t21 >= delta + 1);
        CHECK(t21 <= delta + 2);
    }
}

TEST_CASE("constructor spans can only exceed the optimum") {
    for (const Graph& g : tu::corpus(30, 9, 57)) {
        BlockCutTree t = decompose(g);
        CHECK(label_l21(g, t).span >= oracle::span(g, LabelScheme::l21));
        CHECK(label_l01(g, t).span >= oracle::span(g, LabelScheme::l01));
        CHECK(label_t21(g, t).span >= oracle::span(g, LabelScheme::t21));
    }
}

TEST_CASE("induced subgraphs never need a larger span") {
    for (const Graph& g : tu::corpus(25, 8, 4411)) {
        int full = oracle::span(g, LabelScheme::l21);
        // drop the highest-id vertex
        int n = g.vertex_count();
        if (n <= 2) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto [u, v] : g.edges())
            if (u != n - 1 && v != n - 1) edges.emplace_back(u, v);
        Graph h = Graph::from_edges(n - 1, std::move(edges));
        CHECK(oracle::span(h, LabelScheme::l21) <= full);
    }
}

TEST_CASE("disjoint unions take the larger span") {
    auto pairs = {std::pair{tu::make_cycle(3), tu::make_star(3)},
                  std::pair{tu::make_path(4), tu::make_cycle(5)},
                  std::pair{tu::make_star(2), tu::make_star(4)}};
    for (const auto& [a, b] : pairs) {
        Graph u = disjoint_union(a, b);
        CHECK(oracle::span(u, LabelScheme::l21) ==
              std::max(oracle::span(a, LabelScheme::l21), oracle::span(b, LabelScheme::l21)));
    }
}

TEST_CASE("join spans follow the balanced-join identity") {
    // lambda(G + H) = max(|V_H|-1, lambda(G)) + max(|V_G|-1, lambda(H)) + 2
    // on instances whose parts are balanced enough for the identity
    auto cases = {std::pair{complete(1), complete(1)}, std::pair{complete(2), complete(2)},
                  std::pair{complete(2), complete(3)}, std::pair{tu::make_path(3), tu::make_path(3)},
                  std::pair{tu::make_path(3), complete(2)}};
    for (const auto& [a, b] : cases) {
        Graph j = join_graphs(a, b);
        int la = oracle::span(a, LabelScheme::l21);
        int lb = oracle::span(b, LabelScheme::l21);
        int expected = std::max(b.vertex_count() - 1, la) + std::max(a.vertex_count() - 1, lb) + 2;
        CHECK(oracle::span(j, LabelScheme::l21) == expected);
    }
}

TEST_CASE("a cycle with a triangle on every vertex") {
    // triangle on each vertex of a C3; the oracle fixes the span
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
    for (int i = 0; i < 3; ++i) {
        int a = 3 + 2 * i, b = 4 + 2 * i;
        edges.emplace_back(i, a);
        edges.emplace_back(i, b);
        edges.emplace_back(a, b);
    }
    Graph g = Graph::from_edges(9, std::move(edges));
    CHECK(max_degree(g) == 4);
    int span = oracle::span(g, LabelScheme::l21);
    CHECK(span == 6); // delta + 2; within the paper interval [delta+1, delta+3]
    auto lab = label_l21(g, decompose(g));
    CHECK(validate_l21(g, lab).empty());
    CHECK(lab.span <= 7);
}

TEST_CASE("labelling a single vertex or edge") {
    Graph k1 = Graph::from_edges(1, {});
    BlockCutTree t1 = decompose(k1);
    CHECK(label_l21(k1, t1).span == 0);
    CHECK(label_l01(k1, t1).span == 0);
    CHECK(label_t21(k1, t1).span == 0);

    Graph k2 = tu::make_path(2);
    BlockCutTree t2 = decompose(k2);
    CHECK(label_l21(k2, t2).span == 2);
    CHECK(label_l01(k2, t2).span == 0);
    CHECK(label_t21(k2, t2).span == 3);
}

TEST_SUITE_END();
