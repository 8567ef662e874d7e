#ifndef CACTUS_LABELLING_HPP
#define CACTUS_LABELLING_HPP

#include <string>
#include <vector>

#include "cactus/decomposition.hpp"
#include "cactus/graph.hpp"

namespace cactus {

enum class LabelScheme { l21, l01, t21 };

/// Vertex labelling with its span (max label - min label; labels start at 0).
struct VertexLabelling {
    std::vector<int> labels;
    int span = 0;
};

/// Labels on vertices and edges; edge_labels is parallel to g.edges().
struct TotalLabelling {
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;
    int span = 0;
};

/// Counters for the bounded per-block repair search. The constructive pass
/// almost always closes a block directly; repair_blocks counts blocks that
/// needed the fallback backtracking.
struct LabellingStats {
    int repair_blocks = 0;
    long long repair_steps = 0;
};

/// L(2,1): adjacent labels differ by >= 2, labels of vertices joined by a
/// path of length two differ by >= 1. Span is at most Delta + 3.
VertexLabelling label_l21(const Graph& g, const BlockCutTree& t,
                          LabellingStats* stats = nullptr);

/// L(0,1): only the distance-two constraint (>= 1). Span is at most Delta.
VertexLabelling label_l01(const Graph& g, const BlockCutTree& t,
                          LabellingStats* stats = nullptr);

/// (2,1)-total: adjacent vertices distinct, adjacent edges distinct, a
/// vertex and an incident edge differ by >= 2. Span is at most Delta + 2.
TotalLabelling label_t21(const Graph& g, const BlockCutTree& t,
                         LabellingStats* stats = nullptr);

// Validators return one message per violated constraint, empty when valid.
// They throw GraphError when the labelling is not total over its domain.
std::vector<std::string> validate_l21(const Graph& g, const VertexLabelling& lab);
std::vector<std::string> validate_l01(const Graph& g, const VertexLabelling& lab);
std::vector<std::string> validate_t21(const Graph& g, const TotalLabelling& lab);

} // namespace cactus

#endif
