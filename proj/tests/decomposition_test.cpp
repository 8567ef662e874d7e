#include <numeric>
#include <queue>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

#include "cactus/decomposition.hpp"

using namespace cactus;
namespace tu = cactus::testutil;

namespace {

// oracle: cutvertices by removal + connectivity test
std::vector<Vertex> cutvertices_by_removal(const Graph& g) {
    std::vector<Vertex> cuts;
    const int n = g.vertex_count();
    for (Vertex r = 0; r < n; ++r) {
        Vertex start = r == 0 ? 1 : 0;
        std::vector<char> seen(n, 0);
        seen[r] = 1;
        seen[start] = 1;
        std::vector<Vertex> stack{start};
        int count = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto& a : g.neighbors(v))
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    ++count;
                    stack.push_back(a.to);
                }
        }
        if (count < n - 1) cuts.push_back(r);
    }
    return cuts;
}

void check_tree_invariants(const Graph& g, const BlockCutTree& t) {
    const int n = g.vertex_count();
    // block decomposition identity and edge partition
    long long sum = 0;
    std::vector<int> edge_seen(g.edge_count(), 0);
    std::vector<int> membership(n, 0);
    for (const Block& b : t.blocks) {
        sum += b.size() - 1;
        for (int e : b.edge_ids) ++edge_seen[e];
        for (Vertex v : b.vertices) ++membership[v];
        if (b.kind == BlockKind::edge) {
            CHECK(b.size() == 2);
            CHECK(b.edge_ids.size() == 1);
        } else {
            CHECK(b.size() >= 3);
            CHECK(b.edge_ids.size() == static_cast<size_t>(b.size()));
            // edge slots join consecutive vertices
            for (int i = 0; i < b.size(); ++i) {
                auto [u, v] = g.edge(b.edge_ids[i]);
                Vertex a = b.vertices[i], c = b.vertices[(i + 1) % b.size()];
                CHECK(std::minmax(u, v) == std::minmax(a, c));
            }
        }
    }
    CHECK(sum == n - 1);
    for (int c : edge_seen) CHECK(c == 1);
    for (Vertex v = 0; v < n; ++v) {
        if (t.is_cutvertex[v]) CHECK(membership[v] >= 2);
        else CHECK(membership[v] == 1);
    }
    // rooted tree structure
    int roots = 0;
    for (int b = 0; b < t.block_count(); ++b) {
        if (t.parent[b] < 0) {
            ++roots;
            CHECK(b == t.root);
            CHECK(t.level[b] == 0);
        } else {
            CHECK(t.level[b] == t.level[t.parent[b]] + 1);
            Vertex e = t.entry_point[b];
            const auto& bv = t.blocks[b].vertices;
            const auto& pv = t.blocks[t.parent[b]].vertices;
            CHECK(std::find(bv.begin(), bv.end(), e) != bv.end());
            CHECK(std::find(pv.begin(), pv.end(), e) != pv.end());
            // adjacent blocks share exactly one vertex
            std::set<Vertex> shared;
            for (Vertex v : bv)
                if (std::find(pv.begin(), pv.end(), v) != pv.end()) shared.insert(v);
            CHECK(shared == std::set<Vertex>{e});
            // canonical order starts at the entry point
            CHECK(bv.front() == e);
            if (t.blocks[b].kind == BlockKind::cycle) CHECK(bv[1] < bv.back());
        }
    }
    CHECK(roots == (t.block_count() > 0 ? 1 : 0));
}

// removing entry_point(B) separates B (minus the entry) from the root block
void check_separation(const Graph& g, const BlockCutTree& t) {
    for (int b = 0; b < t.block_count(); ++b) {
        if (b == t.root) continue;
        Vertex e = t.entry_point[b];
        std::vector<char> blocked(g.vertex_count(), 0);
        blocked[e] = 1;
        Vertex start = -1;
        for (Vertex v : t.blocks[t.root].vertices)
            if (v != e) start = v;
        REQUIRE(start >= 0);
        std::vector<Vertex> stack{start};
        std::vector<char> seen(g.vertex_count(), 0);
        seen[start] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto& a : g.neighbors(v))
                if (!seen[a.to] && !blocked[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        for (Vertex v : t.blocks[b].vertices)
            if (v != e) CHECK_FALSE(seen[v]);
    }
}

} // namespace

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("path has two edge blocks and one cutvertex") {
    auto [blocks, cuts] = find_blocks(tu::make_path(3));
    CHECK(blocks.size() == 2);
    for (const Block& b : blocks) CHECK(b.kind == BlockKind::edge);
    CHECK(cuts == std::vector<Vertex>{1});
}

TEST_CASE("a cycle is a single block without cutvertices") {
    auto [blocks, cuts] = find_blocks(tu::make_cycle(5));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].kind == BlockKind::cycle);
    CHECK(blocks[0].size() == 5);
    CHECK(cuts.empty());
}

TEST_CASE("two triangles share one cutvertex") {
    auto [blocks, cuts] = find_blocks(tu::make_two_cycles(3, 3));
    CHECK(blocks.size() == 2);
    CHECK(cuts == std::vector<Vertex>{0});
}

TEST_CASE("cutvertices match the removal oracle") {
    for (int i = 0; i < 60; ++i) {
        Graph g = tu::random_connected(4 + i % 7, i % 3, 500 + i);
        auto [blocks, cuts] = find_blocks(g);
        CHECK(cuts == cutvertices_by_removal(g));
    }
}

TEST_CASE("single block tree") {
    Graph g = tu::make_cycle(5);
    BlockCutTree t = decompose(g);
    CHECK(t.block_count() == 1);
    CHECK(t.root == 0);
    CHECK(t.level[0] == 0);
    CHECK(t.entry_point[0] == -1);
    CHECK(t.blocks[0].vertices.front() == 0);
}

TEST_CASE("star of three triangles roots anywhere and spreads level one") {
    // three triangles sharing vertex 0
    Graph g = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {0, 6}});
    BlockCutTree t = decompose(g);
    REQUIRE(t.block_count() == 3);
    for (int b = 0; b < 3; ++b) {
        if (b == t.root) continue;
        CHECK(t.level[b] == 1);
        CHECK(t.entry_point[b] == 0);
    }
    check_tree_invariants(g, t);
}

TEST_CASE("the unique two-cutvertex block becomes the root") {
    // chain of three triangles: cutvertices 2 and 4 both lie in the middle one
    Graph g = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
    BlockCutTree t = decompose(g);
    const Block& root = t.blocks[t.root];
    CHECK(root.cutvertices_in_block.size() == 2);
    std::vector<Vertex> mid{2, 3, 4};
    std::vector<Vertex> rv = root.vertices;
    std::sort(rv.begin(), rv.end());
    CHECK(rv == mid);
}

TEST_CASE("processing order is a leaf-to-root order") {
    Graph single = tu::make_cycle(4);
    CHECK(processing_order(decompose(single)) == std::vector<int>{0});

    for (const Graph& g : tu::corpus(25, 120, 321)) {
        BlockCutTree t = decompose(g);
        auto order = processing_order(t);
        REQUIRE(order.size() == static_cast<size_t>(t.block_count()));
        CHECK(order.back() == t.root);
        std::vector<int> position(t.block_count());
        for (size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
        for (int b = 0; b < t.block_count(); ++b)
            if (t.parent[b] >= 0) CHECK(position[b] < position[t.parent[b]]);
    }
}

TEST_CASE("tree invariants and separation on the corpus") {
    for (const Graph& g : tu::corpus(30, 80, 777)) {
        BlockCutTree t = decompose(g);
        check_tree_invariants(g, t);
        check_separation(g, t);
    }
}

TEST_CASE("non-cactus input is rejected by build_tbc") {
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(decompose(k4), GraphError);
}

TEST_SUITE_END();
