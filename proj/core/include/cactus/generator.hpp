#ifndef CACTUS_GENERATOR_HPP
#define CACTUS_GENERATOR_HPP

#include <cstdint>

#include "cactus/graph.hpp"

namespace cactus {

/// SplitMix64. Fixed, portable generator so seeded corpora reproduce
/// bit-for-bit across implementations: state advances by the golden-gamma
/// constant and the output is the finalizer of Steele, Lea & Flood (2014).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by modulo reduction (bias is irrelevant here;
    /// determinism is what matters).
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// 53-bit fraction in [0, 1).
    double fraction() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct GenSpec {
    int block_count = 1;
    double cycle_fraction = 0.5;     // probability a new block is a cycle
    int min_cycle_len = 3;
    int max_cycle_len = 6;
    Weight min_edge_weight = 1;
    Weight max_edge_weight = 1;
    Weight min_vertex_weight = 1;
    Weight max_vertex_weight = 1;
    std::uint64_t seed = 0;
};

/// Seeded random cactus: starts from a single vertex and repeatedly attaches
/// a new block (edge with probability 1 - cycle_fraction, else a cycle of
/// uniform length in range) at a uniformly random existing vertex. The draw
/// order is fixed: per block (cycle? / attach point / length if cycle), edge
/// weights in creation order, then one vertex weight per new vertex; the
/// start vertex's weight is drawn first of all. Identical seed, identical
/// graph, bit for bit.
Graph random_cactus(const GenSpec& spec);

} // namespace cactus

#endif
