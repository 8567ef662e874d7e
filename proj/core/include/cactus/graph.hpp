#ifndef CACTUS_GRAPH_HPP
#define CACTUS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = int;
using Weight = std::int64_t;

/// Thrown on malformed input text (bad JSON, bad ids, duplicate edges, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation's domain precondition fails (disconnected input,
/// graph is not a cactus, oracle size cap exceeded, ...).
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected simple graph with dense 0-based vertex ids, positive integer
/// edge weights and non-negative integer vertex weights. Immutable after
/// construction; safe to share across threads.
class Graph {
public:
    struct AdjEntry {
        Vertex to;
        int edge; // index into edges()

        bool operator==(const AdjEntry&) const = default;
    };

    /// Builds a graph and its adjacency index. Edges are normalized to
    /// (min,max) and stored sorted; rejects self-loops, duplicate edges,
    /// out-of-range ids, non-positive edge weights and negative vertex
    /// weights. Connectivity is NOT enforced here (see parse_graph).
    static Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                            std::vector<Weight> edge_weights = {},
                            std::vector<Weight> vertex_weights = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<Vertex, Vertex> edge(int e) const { return edges_[e]; }
    Weight edge_weight(int e) const { return edge_weights_[e]; }
    Weight vertex_weight(Vertex v) const { return vertex_weights_[v]; }
    Weight total_vertex_weight() const;

    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Weight>& edge_weights() const { return edge_weights_; }
    const std::vector<Weight>& vertex_weights() const { return vertex_weights_; }

    /// Neighbors of v sorted by vertex id.
    std::span<const AdjEntry> neighbors(Vertex v) const {
        return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
    }
    int degree(Vertex v) const { return adj_offset_[v + 1] - adj_offset_[v]; }

    /// Index of edge (u,v), or -1 when not present.
    int find_edge(Vertex u, Vertex v) const;

    bool is_connected() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<Weight> edge_weights_;
    std::vector<Weight> vertex_weights_;
    std::vector<int> adj_offset_;
    std::vector<AdjEntry> adj_;
};

int max_degree(const Graph& g);

/// Result of the cactus test. witness is an edge lying on two distinct
/// simple cycles; it is present exactly when is_cactus is false.
struct CactusReport {
    bool is_cactus = false;
    std::optional<std::pair<Vertex, Vertex>> witness;
};

/// True iff every block of g is a single edge or a chordless cycle.
/// Requires g connected. Linear in n + m.
CactusReport is_cactus(const Graph& g);

/// Parses the JSON graph format:
///   {"n": <int>, "edges": [[u,v] | [u,v,w]], "vertex_weights": [w0,...]?}
/// Omitted edge weights default to 1, omitted vertex_weights to all-1.
/// Rejects disconnected graphs.
Graph parse_graph(std::string_view text);

/// Canonical JSON form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

/// GraphViz output, emit-only.
std::string to_dot(const Graph& g);

} // namespace cactus

#endif
