#ifndef CACTUS_SELECTION_HPP
#define CACTUS_SELECTION_HPP

#include <vector>

#include "cactus/decomposition.hpp"
#include "cactus/graph.hpp"

namespace cactus {

/// Result container for the vertex-subset problems; members are sorted.
/// objective is a cardinality or a weight depending on the problem.
struct VertexSet {
    std::vector<Vertex> members;
    Weight objective = 0;
};

/// Two disjoint independent sets; objective is |s1 ∪ s2| or its weight.
struct TwoPartition {
    std::vector<Vertex> s1;
    std::vector<Vertex> s2;
    Weight objective = 0;
};

// Exact solvers, each O(n) by dynamic programming over the block-cut tree in
// processing order. Witnesses are deterministic; objectives are optimal.
VertexSet min_dominating_set(const Graph& g, const BlockCutTree& t);
VertexSet min_2nc_set(const Graph& g, const BlockCutTree& t);
VertexSet max_independent_set(const Graph& g, const BlockCutTree& t);
TwoPartition max_2_independent_set(const Graph& g, const BlockCutTree& t);
TwoPartition max_weight_2_colorable(const Graph& g, const BlockCutTree& t);
VertexSet min_weight_fvs(const Graph& g, const BlockCutTree& t);

// Direct validators, independent of the solvers.
bool dominates(const Graph& g, const std::vector<Vertex>& members);
bool covers_all_edges_2nc(const Graph& g, const std::vector<Vertex>& members);
bool is_independent(const Graph& g, const std::vector<Vertex>& members);
bool is_valid_two_partition(const Graph& g, const TwoPartition& tp);
bool remainder_is_bipartite(const Graph& g, const std::vector<Vertex>& removed);
bool remainder_is_forest(const Graph& g, const std::vector<Vertex>& removed);

} // namespace cactus

#endif
