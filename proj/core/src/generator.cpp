#include "cactus/generator.hpp"

#include <string>

namespace cactus {

namespace {

void validate(const GenSpec& s) {
    if (s.block_count < 1) throw GraphError("generator: block_count must be positive");
    if (!(s.cycle_fraction >= 0.0 && s.cycle_fraction <= 1.0))
        throw GraphError("generator: cycle_fraction must lie in [0,1]");
    if (s.min_cycle_len < 3 || s.min_cycle_len > s.max_cycle_len)
        throw GraphError("generator: cycle length range must satisfy 3 <= min <= max");
    if (s.min_edge_weight < 1 || s.min_edge_weight > s.max_edge_weight)
        throw GraphError("generator: edge weight range must satisfy 1 <= min <= max");
    if (s.min_vertex_weight < 0 || s.min_vertex_weight > s.max_vertex_weight)
        throw GraphError("generator: vertex weight range must satisfy 0 <= min <= max");
}

} // namespace

Graph random_cactus(const GenSpec& spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> edge_weights;
    std::vector<Weight> vertex_weights;
    int n = 1;
    vertex_weights.push_back(rng.range(spec.min_vertex_weight, spec.max_vertex_weight));

    auto edge_weight = [&] { return rng.range(spec.min_edge_weight, spec.max_edge_weight); };
    auto vertex_weight = [&] { return rng.range(spec.min_vertex_weight, spec.max_vertex_weight); };

    for (int b = 0; b < spec.block_count; ++b) {
        bool cycle = rng.fraction() < spec.cycle_fraction;
        Vertex attach = static_cast<Vertex>(rng.bounded(static_cast<std::uint64_t>(n)));
        if (!cycle) {
            Vertex fresh = n++;
            edges.emplace_back(attach, fresh);
            edge_weights.push_back(edge_weight());
            vertex_weights.push_back(vertex_weight());
        } else {
            int len = static_cast<int>(rng.range(spec.min_cycle_len, spec.max_cycle_len));
            Vertex prev = attach;
            for (int i = 0; i < len - 1; ++i) {
                Vertex fresh = n++;
                edges.emplace_back(prev, fresh);
                edge_weights.push_back(edge_weight());
                prev = fresh;
            }
            edges.emplace_back(prev, attach);
            edge_weights.push_back(edge_weight());
            for (int i = 0; i < len - 1; ++i) vertex_weights.push_back(vertex_weight());
        }
    }
    return Graph::from_edges(n, std::move(edges), std::move(edge_weights),
                             std::move(vertex_weights));
}

} // namespace cactus
