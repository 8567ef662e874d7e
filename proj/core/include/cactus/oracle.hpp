#ifndef CACTUS_ORACLE_HPP
#define CACTUS_ORACLE_HPP

#include <functional>
#include <vector>

#include "cactus/decomposition.hpp"
#include "cactus/distances.hpp"
#include "cactus/graph.hpp"
#include "cactus/labelling.hpp"
#include "cactus/selection.hpp"

// Brute-force reference implementations. Deliberately naive, deliberately
// independent of the fast paths; size caps are hard errors, never silent
// truncation.

namespace cactus::oracle {

/// Priority-queue shortest paths; no cactus assumption.
DistanceMap sssp(const Graph& g, Vertex x);

DistanceMatrix apsp(const Graph& g);

/// Longest simple path lengths by exhaustive path enumeration, n <= 12.
LongestMap longest(const Graph& g, Vertex x);

/// Smallest subset satisfying `predicate`, by enumeration in increasing
/// cardinality and lexicographic order within a cardinality (n <= 18).
VertexSet min_subset(const Graph& g,
                     const std::function<bool(const Graph&, const std::vector<Vertex>&)>& predicate);

/// Minimum vertex-weight subset satisfying `predicate` (n <= 14). Ties are
/// broken toward the lexicographically smallest member list.
VertexSet min_weight_subset(const Graph& g,
                            const std::function<bool(const Graph&, const std::vector<Vertex>&)>& predicate);

/// Maximum independent set by subset dynamic programming, n <= 18. The
/// witness is the lexicographically smallest maximum independent set.
VertexSet max_independent(const Graph& g);

/// Maximum 2-independent set (two disjoint independent sets maximizing the
/// size of their union), n <= 16.
TwoPartition max_2_independent(const Graph& g);

/// Exact minimum span of an L(2,1) / L(0,1) / (2,1)-total labelling by
/// backtracking over palettes of increasing size, n <= 10. Accepts any
/// simple graph (also disconnected ones).
int span(const Graph& g, LabelScheme scheme);

/// Calls fn once per spanning tree of the cactus with the deleted edge ids
/// (one per cycle block). The number of trees is the product of the cycle
/// lengths; products above 10^5 are a hard error.
void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<int>&)>& fn);

long long spanning_tree_product(const Graph& g);

/// Generic spanning-tree count via Kirchhoff's theorem (integer Bareiss
/// elimination); cross-checks the product identity.
long long count_spanning_trees_kirchhoff(const Graph& g);

} // namespace cactus::oracle

#endif
