#include <algorithm>
#include <cstdint>
#include <queue>

#include "cactus/selection.hpp"

namespace cactus {

namespace {

std::vector<char> member_mask(const Graph& g, const std::vector<Vertex>& members) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : members) {
        if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex id out of range");
        in[v] = 1;
    }
    return in;
}

} // namespace

bool dominates(const Graph& g, const std::vector<Vertex>& members) {
    auto in = member_mask(g, members);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool ok = false;
        for (auto& a : g.neighbors(v))
            if (in[a.to]) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

bool covers_all_edges_2nc(const Graph& g, const std::vector<Vertex>& members) {
    const int n = g.vertex_count();
    const int words = (static_cast<int>(members.size()) + 63) / 64;
    // balls[v] = set of members within hop distance 2 of v
    std::vector<std::uint64_t> balls(static_cast<size_t>(n) * std::max(words, 1), 0);
    for (size_t i = 0; i < members.size(); ++i) {
        Vertex z = members[i];
        auto mark = [&](Vertex v) {
            balls[static_cast<size_t>(v) * words + i / 64] |= 1ULL << (i % 64);
        };
        mark(z);
        for (auto& a : g.neighbors(z)) {
            mark(a.to);
            for (auto& b : g.neighbors(a.to)) mark(b.to);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edge(e);
        bool covered = false;
        for (int w = 0; w < words; ++w)
            if (balls[static_cast<size_t>(x) * words + w] &
                balls[static_cast<size_t>(y) * words + w]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& members) {
    auto in = member_mask(g, members);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (in[u] && in[v]) return false;
    }
    return true;
}

bool is_valid_two_partition(const Graph& g, const TwoPartition& tp) {
    auto in1 = member_mask(g, tp.s1);
    for (Vertex v : tp.s2)
        if (in1[v]) return false;
    return is_independent(g, tp.s1) && is_independent(g, tp.s2);
}

bool remainder_is_bipartite(const Graph& g, const std::vector<Vertex>& removed) {
    auto gone = member_mask(g, removed);
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || color[s] != -1) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (auto& a : g.neighbors(v)) {
                if (gone[a.to]) continue;
                if (color[a.to] == -1) {
                    color[a.to] = color[v] ^ 1;
                    q.push(a.to);
                } else if (color[a.to] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool remainder_is_forest(const Graph& g, const std::vector<Vertex>& removed) {
    auto gone = member_mask(g, removed);
    int vertices = 0, edges = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) ++vertices;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!gone[u] && !gone[v]) ++edges;
    }
    // count components of the remainder
    std::vector<char> seen(g.vertex_count(), 0);
    int components = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto& a : g.neighbors(v))
                if (!gone[a.to] && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
    }
    return edges == vertices - components;
}

} // namespace cactus
