#ifndef CACTUS_DISTANCES_HPP
#define CACTUS_DISTANCES_HPP

#include <utility>
#include <vector>

#include "cactus/decomposition.hpp"
#include "cactus/graph.hpp"

namespace cactus {

/// Single-source shortest path lengths; predecessor[source] == -1.
struct DistanceMap {
    Vertex source = 0;
    std::vector<Weight> dist;
    std::vector<Vertex> predecessor;
};

/// Single-source longest simple path lengths.
struct LongestMap {
    Vertex source = 0;
    std::vector<Weight> ldist;
};

struct DistanceMatrix {
    int n = 0;
    std::vector<Weight> values; // row-major n*n

    Weight at(Vertex u, Vertex v) const { return values[static_cast<size_t>(u) * n + v]; }
};

/// One deleted edge per cycle block turns the cactus into a spanning tree;
/// height is the maximum root-to-vertex distance in that tree.
struct SpanningTreeResult {
    std::vector<std::pair<Vertex, Vertex>> deleted_edges;
    Weight height = 0;
    Vertex root = 0;
};

/// Shortest paths from x, O(n). Blocks are visited outward from the blocks
/// containing x; within a cycle block the distance from the gateway is the
/// smaller arc sum, within an edge block the edge weight.
DistanceMap sssp(const Graph& g, const BlockCutTree& t, Vertex x);

/// n independent sssp runs, O(n^2).
DistanceMatrix apsp(const Graph& g, const BlockCutTree& t);

/// Longest simple path lengths from x: same traversal as sssp with the
/// larger arc sum inside each cycle block.
LongestMap longest_simple(const Graph& g, const BlockCutTree& t, Vertex x);

/// Eccentricity e(u) = max_v d(u,v) for every vertex, O(n) via two passes
/// over the block tree.
std::vector<Weight> eccentricities(const Graph& g, const BlockCutTree& t);

/// Elongation el(u) = max_v ld(u,v) for every vertex, O(n).
std::vector<Weight> elongations(const Graph& g, const BlockCutTree& t);

/// Spanning tree of maximum height: root attains the maximum elongation
/// (lowest id on ties), height equals it, and the deleted edges keep the
/// maximum height path intact.
SpanningTreeResult max_height_spanning_tree(const Graph& g, const BlockCutTree& t);

/// Spanning tree of minimum height: root is the center (lowest id on ties),
/// height equals the radius, and every vertex keeps its shortest distance
/// from the center.
SpanningTreeResult min_height_spanning_tree(const Graph& g, const BlockCutTree& t);

} // namespace cactus

#endif
