#ifndef CACTUS_DECOMPOSITION_HPP
#define CACTUS_DECOMPOSITION_HPP

#include <span>
#include <utility>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

// `other` only appears for non-cactus input; build_tbc rejects it.
enum class BlockKind { edge, cycle, other };

/// A biconnected component. Cycle blocks store their vertices in cyclic
/// order; edge blocks store the two endpoints. After build_tbc the cycle
/// order is canonical: it starts at the entry point (root block: at its
/// lowest-id vertex) and proceeds toward the lower-id neighbor.
struct Block {
    int id = 0;
    BlockKind kind = BlockKind::edge;
    std::vector<Vertex> vertices;
    std::vector<Vertex> cutvertices_in_block; // sorted
    // graph edges inside this block; after build_tbc, a cycle block's
    // edge_ids[i] joins vertices[i] and vertices[(i+1) % k]
    std::vector<int> edge_ids;

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Rooted block-cut tree. Adjacent blocks share exactly one cutvertex; for
/// a non-root block that shared vertex toward the parent is its entry point.
struct BlockCutTree {
    std::vector<Block> blocks;
    int root = -1;
    std::vector<int> parent;         // per block id, -1 at root
    std::vector<Vertex> entry_point; // per block id, -1 at root
    std::vector<int> level;          // per block id, root at 0

    std::vector<char> is_cutvertex; // per graph vertex

    // flat adjacency (kept compact: a graph has up to n blocks)
    std::vector<int> vertex_block_offset, vertex_block_ids; // blocks per vertex
    std::vector<int> child_offset, child_ids;               // children per block, ascending
    std::vector<int> slot_offset;                           // per block, into slot_weights
    std::vector<Weight> slot_weights;  // edge weights in block slot order
    std::vector<int> flat_offset;      // per block, into the two arrays below
    std::vector<Vertex> flat_vertices; // block vertex lists, concatenated
    std::vector<int> flat_edge_ids;    // block edge ids in slot order (edges padded)
    std::vector<char> flat_is_cut;     // cutvertex flag aligned with flat_vertices

    int block_count() const { return static_cast<int>(blocks.size()); }

    std::span<const int> blocks_of(Vertex v) const {
        return {vertex_block_ids.data() + vertex_block_offset[v],
                vertex_block_ids.data() + vertex_block_offset[v + 1]};
    }
    std::span<const int> children_of(int b) const {
        return {child_ids.data() + child_offset[b], child_ids.data() + child_offset[b + 1]};
    }
    // weight of blocks[b].edge_ids[slot] without touching the edge table
    std::span<const Weight> slot_weights_of(int b) const {
        return {slot_weights.data() + slot_offset[b], slot_weights.data() + slot_offset[b + 1]};
    }
};

/// Biconnected components plus cutvertices by iterative DFS, O(n + m).
/// Requires g connected. Block ids follow DFS pop order and are
/// deterministic (adjacency lists are sorted).
std::pair<std::vector<Block>, std::vector<Vertex>> find_blocks(const Graph& g);

/// Builds the rooted tree over the blocks of a cactus. The root is a block
/// containing at least two cutvertices when one exists, otherwise block 0.
/// Throws GraphError when g is not a cactus.
BlockCutTree build_tbc(const Graph& g, std::vector<Block> blocks,
                       const std::vector<Vertex>& cutvertices);

BlockCutTree decompose(const Graph& g); // find_blocks + build_tbc

/// Post-order over the tree: every block appears after all of its children,
/// root last. Children are visited in ascending block-id order.
std::vector<int> processing_order(const BlockCutTree& t);

} // namespace cactus

#endif
