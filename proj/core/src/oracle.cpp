#include "cactus/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

namespace cactus::oracle {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

void require_cap(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw GraphError(std::string("oracle cap exceeded: ") + what + " allows n <= " +
                         std::to_string(cap));
}

// Lexicographic order on vertex sets encoded as bitmasks: the set whose
// smallest non-shared element is smaller comes first.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return a & (diff & -diff);
}

std::vector<Vertex> mask_to_vec(std::uint32_t mask) {
    std::vector<Vertex> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

} // namespace

DistanceMap sssp(const Graph& g, Vertex x) {
    if (x < 0 || x >= g.vertex_count()) throw GraphError("source vertex out of range");
    DistanceMap r;
    r.source = x;
    r.dist.assign(g.vertex_count(), kInf);
    r.predecessor.assign(g.vertex_count(), -1);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    r.dist[x] = 0;
    pq.emplace(0, x);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != r.dist[v]) continue;
        for (auto& a : g.neighbors(v)) {
            Weight nd = d + g.edge_weight(a.edge);
            if (nd < r.dist[a.to]) {
                r.dist[a.to] = nd;
                r.predecessor[a.to] = v;
                pq.emplace(nd, a.to);
            }
        }
    }
    return r;
}

DistanceMatrix apsp(const Graph& g) {
    DistanceMatrix m;
    m.n = g.vertex_count();
    m.values.reserve(static_cast<size_t>(m.n) * m.n);
    for (Vertex x = 0; x < m.n; ++x) {
        auto row = sssp(g, x);
        m.values.insert(m.values.end(), row.dist.begin(), row.dist.end());
    }
    return m;
}

LongestMap longest(const Graph& g, Vertex x) {
    require_cap(g, 12, "longest simple path enumeration");
    if (x < 0 || x >= g.vertex_count()) throw GraphError("source vertex out of range");
    LongestMap r;
    r.source = x;
    r.ldist.assign(g.vertex_count(), 0);
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[x] = 1;
    // depth-first over all simple paths from x
    std::vector<std::tuple<Vertex, size_t, Weight>> stack{{x, 0, 0}};
    while (!stack.empty()) {
        auto& [v, it, len] = stack.back();
        auto nbrs = g.neighbors(v);
        if (it < nbrs.size()) {
            auto a = nbrs[it++];
            if (on_path[a.to]) continue;
            Weight nl = len + g.edge_weight(a.edge);
            r.ldist[a.to] = std::max(r.ldist[a.to], nl);
            on_path[a.to] = 1;
            stack.emplace_back(a.to, 0, nl);
        } else {
            on_path[v] = 0;
            stack.pop_back();
        }
    }
    return r;
}

VertexSet min_subset(const Graph& g,
                     const std::function<bool(const Graph&, const std::vector<Vertex>&)>& predicate) {
    require_cap(g, 18, "subset enumeration");
    const int n = g.vertex_count();
    std::vector<Vertex> members;
    for (int k = 0; k <= n; ++k) {
        // combinations of size k in lexicographic order
        std::vector<Vertex> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            if (predicate(g, combo)) return {combo, k};
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    throw GraphError("no subset satisfies the predicate");
}

VertexSet min_weight_subset(const Graph& g,
                            const std::function<bool(const Graph&, const std::vector<Vertex>&)>& predicate) {
    require_cap(g, 14, "weighted subset enumeration");
    const int n = g.vertex_count();
    Weight best = kInf;
    std::uint32_t best_mask = 0;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Weight w = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) w += g.vertex_weight(v);
        if (found && (w > best || (w == best && !lex_less(mask, best_mask)))) continue;
        auto vec = mask_to_vec(mask);
        if (predicate(g, vec)) {
            best = w;
            best_mask = mask;
            found = true;
        }
    }
    if (!found) throw GraphError("no subset satisfies the predicate");
    return {mask_to_vec(best_mask), best};
}

namespace {

// mis_table[mask] = size of a maximum independent set of the induced
// subgraph on `mask`
std::vector<int> mis_table(const Graph& g, const std::vector<std::uint32_t>& adj) {
    const int n = g.vertex_count();
    std::vector<int> mis(1u << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t closed = adj[v] | (1u << v);
        mis[mask] = std::max(mis[mask & (mask - 1)], 1 + mis[mask & ~closed]);
    }
    return mis;
}

// lexicographically smallest maximum independent set within `mask`
std::uint32_t lex_min_mis(const std::vector<int>& mis, const std::vector<std::uint32_t>& adj,
                          std::uint32_t mask, int n) {
    std::uint32_t chosen = 0;
    std::uint32_t remaining = mask;
    for (int v = 0; v < n; ++v) {
        if (!(remaining & (1u << v))) continue;
        std::uint32_t without_ball = remaining & ~(adj[v] | (1u << v));
        if (1 + mis[without_ball] == mis[remaining]) {
            chosen |= 1u << v;
            remaining = without_ball;
        } else {
            remaining &= ~(1u << v);
        }
    }
    return chosen;
}

} // namespace

VertexSet max_independent(const Graph& g) {
    require_cap(g, 18, "independent set enumeration");
    auto adj = adjacency_masks(g);
    auto mis = mis_table(g, adj);
    std::uint32_t full = (1u << g.vertex_count()) - 1;
    std::uint32_t witness = lex_min_mis(mis, adj, full, g.vertex_count());
    return {mask_to_vec(witness), mis[full]};
}

TwoPartition max_2_independent(const Graph& g) {
    require_cap(g, 16, "2-independent set enumeration");
    const int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    auto mis = mis_table(g, adj);
    const std::uint32_t full = (1u << n) - 1;

    int best = -1;
    std::uint32_t best_a = 0;
    for (std::uint32_t a = 0; a <= full; ++a) {
        bool independent = true;
        for (std::uint32_t rest = a; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & a) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        int value = std::popcount(a) + mis[full & ~a];
        if (value > best) {
            best = value;
            best_a = a;
        }
    }
    std::uint32_t b = lex_min_mis(mis, adj, full & ~best_a, n);
    return {mask_to_vec(best_a), mask_to_vec(b), best};
}

namespace {

struct SpanProblem {
    int elements = 0;
    // per element: list of (other element, required difference)
    std::vector<std::vector<std::pair<int, int>>> constraints;

    void add(int a, int b, int req) {
        constraints[a].emplace_back(b, req);
        constraints[b].emplace_back(a, req);
    }
};

SpanProblem build_span_problem(const Graph& g, LabelScheme scheme) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    SpanProblem p;
    p.elements = (scheme == LabelScheme::t21) ? n + m : n;
    p.constraints.resize(p.elements);

    if (scheme == LabelScheme::t21) {
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edge(e);
            p.add(u, v, 1);          // adjacent vertices distinct
            p.add(u, n + e, 2);      // vertex vs incident edge
            p.add(v, n + e, 2);
        }
        for (Vertex v = 0; v < n; ++v) {
            auto nbrs = g.neighbors(v);
            for (size_t i = 0; i < nbrs.size(); ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j)
                    p.add(n + nbrs[i].edge, n + nbrs[j].edge, 1); // adjacent edges distinct
        }
        return p;
    }

    // vertex pairs joined by a path of length two (a shared neighbor)
    std::vector<std::vector<char>> d2(n, std::vector<char>(n, 0));
    for (Vertex w = 0; w < n; ++w) {
        auto nbrs = g.neighbors(w);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                d2[nbrs[i].to][nbrs[j].to] = d2[nbrs[j].to][nbrs[i].to] = 1;
    }
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        adj[u][v] = adj[v][u] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int req = 0;
            if (scheme == LabelScheme::l21) {
                if (adj[u][v]) req = 2;
                else if (d2[u][v]) req = 1;
            } else { // l01: adjacency alone imposes nothing
                if (d2[u][v]) req = 1;
            }
            if (req) p.add(u, v, req);
        }
    return p;
}

bool feasible_with_span(const SpanProblem& p, const std::vector<int>& order, int k) {
    std::vector<int> label(p.elements, -1);
    // backtracking over elements in the given order
    std::vector<int> trial(p.elements, 0);
    int depth = 0;
    while (true) {
        if (depth == p.elements) return true;
        int el = order[depth];
        bool placed = false;
        for (int& c = trial[depth]; c <= k; ++c) {
            bool ok = true;
            for (auto [other, req] : p.constraints[el])
                if (label[other] >= 0 && std::abs(label[other] - c) < req) {
                    ok = false;
                    break;
                }
            if (ok) {
                label[el] = c;
                ++c;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++depth;
            if (depth < p.elements) trial[depth] = 0;
        } else {
            label[el] = -1;
            --depth;
            if (depth < 0) return false;
            label[order[depth]] = -1;
        }
    }
}

} // namespace

int span(const Graph& g, LabelScheme scheme) {
    require_cap(g, 10, "exact span search");
    SpanProblem p = build_span_problem(g, scheme);

    // most-constrained-first static order
    std::vector<int> order(p.elements);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = p.constraints[a].size(), kb = p.constraints[b].size();
        return ka != kb ? ka > kb : a < b;
    });

    int delta = max_degree(g);
    int lower = 0;
    if (g.edge_count() > 0) {
        if (scheme == LabelScheme::l21) lower = delta + 1;
        else if (scheme == LabelScheme::l01) lower = std::max(0, delta - 1);
        else lower = std::max(delta + 1, 2);
    } else if (scheme == LabelScheme::l01 && delta >= 1) {
        lower = delta - 1;
    }
    for (int k = lower;; ++k)
        if (feasible_with_span(p, order, k)) return k;
}

void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<int>&)>& fn) {
    BlockCutTree t = decompose(g);
    std::vector<const std::vector<int>*> cycles;
    long long product = 1;
    for (const Block& b : t.blocks) {
        if (b.kind != BlockKind::cycle) continue;
        cycles.push_back(&b.edge_ids);
        product *= static_cast<long long>(b.edge_ids.size());
        if (product > 100000)
            throw GraphError("oracle cap exceeded: spanning tree product above 10^5");
    }
    std::vector<size_t> counter(cycles.size(), 0);
    std::vector<int> deleted(cycles.size());
    while (true) {
        for (size_t i = 0; i < cycles.size(); ++i) deleted[i] = (*cycles[i])[counter[i]];
        fn(deleted);
        size_t i = 0;
        for (; i < cycles.size(); ++i) {
            if (++counter[i] < cycles[i]->size()) break;
            counter[i] = 0;
        }
        if (i == cycles.size()) break;
    }
}

long long spanning_tree_product(const Graph& g) {
    BlockCutTree t = decompose(g);
    long long product = 1;
    for (const Block& b : t.blocks)
        if (b.kind == BlockKind::cycle) {
            product *= static_cast<long long>(b.vertices.size());
            if (product > (1LL << 60)) throw GraphError("spanning tree count overflows");
        }
    return product;
}

long long count_spanning_trees_kirchhoff(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    // Laplacian minor determinant by fraction-free Bareiss elimination
    const int k = n - 1;
    std::vector<__int128> a(static_cast<size_t>(k) * k, 0);
    auto at = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * k + j]; };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (u < k) at(u, u) += 1;
        if (v < k) at(v, v) += 1;
        if (u < k && v < k) {
            at(u, v) -= 1;
            at(v, u) -= 1;
        }
    }
    __int128 prev = 1;
    int sign = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != col) {
            for (int j = 0; j < k; ++j) std::swap(at(pivot, j), at(col, j));
            sign = -sign;
        }
        for (int row = col + 1; row < k; ++row) {
            for (int j = col + 1; j < k; ++j)
                at(row, j) = (at(row, j) * at(col, col) - at(row, col) * at(col, j)) / prev;
            at(row, col) = 0;
        }
        prev = at(col, col);
    }
    __int128 det = sign * at(k - 1, k - 1);
    return static_cast<long long>(det);
}

} // namespace cactus::oracle
