#include "cactus/distances.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace cactus {

namespace {

constexpr Weight kNeg = std::numeric_limits<Weight>::min() / 4;

void require_cactus_tree(const BlockCutTree& t, const Graph& g) {
    if (g.vertex_count() > 1 && t.root < 0) throw GraphError("empty block-cut tree");
}

struct SsspEdges {
    std::vector<Weight> dist;
    std::vector<Vertex> pred;
    std::vector<int> pred_edge;
    std::vector<int> home_block;    // block through which each vertex was reached
    std::vector<Vertex> block_gate; // per block: the cutvertex it was entered by
};

// Per-source traversal: blocks are visited outward from the blocks
// containing the source; gateway(b) is the cutvertex through which the
// source reaches block b. Reusable across sources; results accumulate in
// one interleaved record per vertex to keep the stores in a single stream.
struct OutwardRunner {
    struct Rec {
        Weight dist;
        Vertex pred;
        int pred_edge;
    };

    const Graph& g;
    const BlockCutTree& t;
    SsspEdges r;
    std::vector<Rec> rec;
    std::vector<char> visited;
    std::vector<char> expanded;
    struct Item {
        int block;
        Vertex gate;
        Weight gate_dist;
    };
    std::vector<Item> frontier;
    bool longest = false;
    bool full = false; // also fill pred_edge / home_block / block_gate

    OutwardRunner(const Graph& graph, const BlockCutTree& tree, bool want_full = false)
        : g(graph), t(tree), full(want_full) {
        rec.resize(g.vertex_count());
        if (full) {
            r.home_block.resize(g.vertex_count());
            r.block_gate.resize(t.block_count());
        }
        visited.resize(t.block_count());
        expanded.resize(g.vertex_count());
        frontier.reserve(t.block_count());
    }

    // chooses the arc per cycle vertex; ties go along the stored orientation
    void process_cycle(int bid, int kind_size, Vertex gate, Weight base) {
        const int k = kind_size;
        const Vertex* verts = t.flat_vertices.data() + t.flat_offset[bid];
        const int* eids = t.flat_edge_ids.data() + t.flat_offset[bid];
        const Weight* w = t.slot_weights.data() + t.slot_offset[bid];
        int p = 0;
        while (verts[p] != gate) ++p;
        auto wrap = [k](int i) { return i >= k ? i - k : i; };
        Weight acc = 0;
        for (int i = 1; i < k; ++i) {
            int slot = wrap(p + i - 1);
            acc += w[slot];
            rec[verts[wrap(p + i)]] = {base + acc, verts[slot], eids[slot]};
        }
        acc = 0;
        for (int i = k - 1; i >= 1; --i) {
            int slot = wrap(p + i);
            acc += w[slot];
            Vertex v = verts[slot];
            Weight cand = base + acc;
            bool replace = longest ? (cand > rec[v].dist) : (cand < rec[v].dist);
            if (replace) rec[v] = {cand, verts[wrap(p + i + 1)], eids[slot]};
        }
    }

    void run(Vertex x, bool want_longest) {
        if (x < 0 || x >= g.vertex_count()) throw GraphError("source vertex out of range");
        longest = want_longest;
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(expanded.begin(), expanded.end(), 0);
        std::fill(r.block_gate.begin(), r.block_gate.end(), -1);
        frontier.clear();

        rec[x] = {0, -1, -1};
        expanded[x] = 1;
        for (int b : t.blocks_of(x)) {
            visited[b] = 1;
            frontier.push_back({b, x, 0});
        }
        // per-vertex distances land in a single interleaved store stream;
        // each frontier item carries the gate distance so no record is
        // re-read once its block has moved on
        for (size_t head = 0; head < frontier.size(); ++head) {
            auto [bid, gate, base] = frontier[head];
            const int begin = t.flat_offset[bid], end = t.flat_offset[bid + 1];
            const int k = end - begin;
            if (full) {
                r.block_gate[bid] = gate;
                for (int i = begin; i < end; ++i) {
                    Vertex v = t.flat_vertices[i];
                    if (v != gate) r.home_block[v] = bid;
                }
            }
            if (k == 2) { // edge block
                Vertex a = t.flat_vertices[begin], b2 = t.flat_vertices[begin + 1];
                Vertex other = a == gate ? b2 : a;
                rec[other] = {base + t.slot_weights[t.slot_offset[bid]], gate,
                              t.flat_edge_ids[begin]};
            } else {
                process_cycle(bid, k, gate, base);
            }
            // every block sharing one of these cutvertices is adjacent to
            // this one, so each cutvertex needs expanding only once
            for (int i = begin; i < end; ++i) {
                if (!t.flat_is_cut[i]) continue;
                Vertex v = t.flat_vertices[i];
                if (expanded[v]) continue;
                expanded[v] = 1;
                Weight vdist = rec[v].dist;
                for (int nb : t.blocks_of(v)) {
                    if (!visited[nb]) {
                        visited[nb] = 1;
                        frontier.push_back({nb, v, vdist});
                    }
                }
            }
        }

        const int n = g.vertex_count();
        r.dist.resize(n);
        r.pred.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            r.dist[v] = rec[v].dist;
            r.pred[v] = rec[v].pred;
        }
        if (full) {
            r.pred_edge.resize(n);
            for (Vertex v = 0; v < n; ++v) r.pred_edge[v] = rec[v].pred_edge;
        }
    }
};

SsspEdges run_outward(const Graph& g, const BlockCutTree& t, Vertex x, bool longest,
                      bool full = false) {
    require_cactus_tree(t, g);
    OutwardRunner runner(g, t, full);
    runner.run(x, longest);
    return std::move(runner.r);
}

// f(i) = max over other cycle positions j of (arc_dist(i,j) + value[j]),
// where arc_dist is the smaller (mode_min) or larger arc sum. O(k) with two
// monotone deques over the doubled prefix array. Positions with value kNeg
// never win. Scratch buffers persist across blocks.
struct CycleWindow {
    std::vector<Weight> prefix, out;
    std::vector<int> near_q, far_q;
    int near_head = 0, far_head = 0;

    // slot_weights/value live in the caller; k entries each
    const std::vector<Weight>& run(const Weight* slot_weights, const Weight* value, int k,
                                   bool mode_min) {
        prefix.resize(2 * k + 1);
        prefix[0] = 0;
        for (int q = 0; q < 2 * k; ++q) prefix[q + 1] = prefix[q] + slot_weights[q % k];
        const Weight total = prefix[k];

        auto val = [&](int q) { return value[q % k]; };
        // near window (i, hi): the forward arc prefix[q]-prefix[i] is the
        // smaller one (ties included); far window [hi, i+k-1]: the
        // complement arc is smaller; the arc used depends on the mode
        auto near_key = [&](int q) { return mode_min ? val(q) + prefix[q] : val(q) - prefix[q]; };
        auto far_key = [&](int q) { return mode_min ? val(q) - prefix[q] : val(q) + prefix[q]; };

        near_q.clear();
        far_q.clear();
        near_head = far_head = 0;
        auto push_near = [&](int q) {
            while (static_cast<int>(near_q.size()) > near_head &&
                   near_key(near_q.back()) <= near_key(q))
                near_q.pop_back();
            near_q.push_back(q);
        };
        auto push_far = [&](int q) {
            while (static_cast<int>(far_q.size()) > far_head &&
                   far_key(far_q.back()) <= far_key(q))
                far_q.pop_back();
            far_q.push_back(q);
        };
        auto near_empty = [&] { return static_cast<int>(near_q.size()) == near_head; };
        auto far_empty = [&] { return static_cast<int>(far_q.size()) == far_head; };

        out.assign(k, kNeg);
        int hi = 1;
        int pushed = 1;
        for (int i = 0; i < k; ++i) {
            while (pushed <= i + k - 1) push_far(pushed++);
            if (hi < i + 1) hi = i + 1;
            while (hi <= i + k - 1 && 2 * (prefix[hi] - prefix[i]) <= total) push_near(hi++);
            while (!far_empty() && far_q[far_head] < hi) ++far_head;
            while (!near_empty() && near_q[near_head] <= i) ++near_head;

            Weight best = kNeg;
            if (!near_empty() && val(near_q[near_head]) != kNeg) {
                int q = near_q[near_head];
                Weight arc = prefix[q] - prefix[i];
                best = std::max(best, val(q) + (mode_min ? arc : total - arc));
            }
            if (!far_empty() && val(far_q[far_head]) != kNeg) {
                int q = far_q[far_head];
                Weight arc = prefix[q] - prefix[i];
                best = std::max(best, val(q) + (mode_min ? total - arc : arc));
            }
            out[i] = best;
        }
        return out;
    }
};

// down[v], up[v]: farthest (mode-dependent) distance from v into / out of
// its hanging subcactus; ecc/elongation is the max of the two.
std::vector<Weight> extreme_distances(const Graph& g, const BlockCutTree& t, bool mode_min) {
    const int n = g.vertex_count();
    std::vector<Weight> down(n, 0), up(n, 0);
    if (t.root < 0) return down; // single vertex

    struct Top2 {
        Weight best1 = kNeg, best2 = kNeg;
        int block1 = -1;

        void offer(Weight v, int blk) {
            if (v > best1) {
                best2 = best1;
                best1 = v;
                block1 = blk;
            } else if (v > best2) {
                best2 = v;
            }
        }
        Weight excluding(int blk) const { return blk == block1 ? best2 : best1; }
    };
    std::vector<Top2> contrib(n);

    auto order = processing_order(t);

    int max_k = 2;
    for (const Block& b : t.blocks) max_k = std::max(max_k, b.size());
    std::vector<Weight> gate_dist(max_k), value(max_k);
    CycleWindow window;

    // arc distances from vertices[0] (the entry) into gate_dist
    auto block_dists_from_entry = [&](const Block& b) {
        const int k = b.size();
        const Weight* w = t.slot_weights.data() + t.slot_offset[b.id];
        Weight total = 0;
        for (int i = 0; i < k; ++i) total += w[i];
        Weight acc = 0;
        gate_dist[0] = 0;
        for (int i = 1; i < k; ++i) {
            acc += w[i - 1];
            gate_dist[i] = mode_min ? std::min(acc, total - acc) : std::max(acc, total - acc);
        }
    };

    // leaf-to-root: fold each block's subtree reach into its entry point
    for (int bid : order) {
        if (bid == t.root) continue;
        const Block& b = t.blocks[bid];
        Vertex e = t.entry_point[bid];
        Weight best = kNeg;
        if (b.kind == BlockKind::edge) {
            Vertex w = b.vertices[0] == e ? b.vertices[1] : b.vertices[0];
            best = g.edge_weight(b.edge_ids[0]) + down[w];
        } else {
            block_dists_from_entry(b); // canonical order starts at the entry
            for (int i = 1; i < b.size(); ++i)
                best = std::max(best, gate_dist[i] + down[b.vertices[i]]);
        }
        contrib[e].offer(best, bid);
        down[e] = std::max(down[e], best);
    }

    // root-to-leaf: distribute the outside reach
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Block& b = t.blocks[*it];
        const int k = b.size();
        const bool is_root = (*it == t.root);
        Vertex e = is_root ? -1 : t.entry_point[*it];

        if (b.kind == BlockKind::edge) {
            Vertex a = b.vertices[0], c = b.vertices[1];
            Weight w = g.edge_weight(b.edge_ids[0]);
            if (is_root) {
                up[a] = std::max(up[a], w + down[c]);
                up[c] = std::max(up[c], w + down[a]);
            } else {
                Vertex other = (a == e) ? c : a;
                Weight base = std::max<Weight>(up[e], std::max<Weight>(contrib[e].excluding(*it), 0));
                up[other] = w + std::max<Weight>(base, 0);
            }
            continue;
        }

        for (int i = 0; i < k; ++i) value[i] = down[b.vertices[i]];
        if (!is_root) value[0] = kNeg; // the entry side is handled via up/base
        const auto& through =
            window.run(t.slot_weights.data() + t.slot_offset[b.id], value.data(), k, mode_min);

        Weight base = 0;
        if (!is_root) {
            block_dists_from_entry(b);
            base = std::max<Weight>(std::max<Weight>(up[e], contrib[e].excluding(*it)), 0);
        }
        for (int i = 0; i < k; ++i) {
            Vertex v = b.vertices[i];
            if (!is_root && v == e) continue;
            Weight best = through[i];
            if (!is_root) best = std::max(best, gate_dist[i] + base);
            up[v] = std::max(up[v], best);
        }
    }

    std::vector<Weight> ecc(n, 0);
    for (Vertex v = 0; v < n; ++v) ecc[v] = std::max(down[v], std::max<Weight>(up[v], 0));
    return ecc;
}

} // namespace

DistanceMap sssp(const Graph& g, const BlockCutTree& t, Vertex x) {
    auto r = run_outward(g, t, x, false);
    return {x, std::move(r.dist), std::move(r.pred)};
}

DistanceMatrix apsp(const Graph& g, const BlockCutTree& t) {
    const int n = g.vertex_count();
    if (n > 8192) throw GraphError("apsp materializes an n x n matrix; n <= 8192 required");
    require_cactus_tree(t, g);
    DistanceMatrix m;
    m.n = n;
    m.values.reserve(static_cast<size_t>(n) * n);
    OutwardRunner runner(g, t);
    for (Vertex x = 0; x < n; ++x) {
        runner.run(x, false);
        m.values.insert(m.values.end(), runner.r.dist.begin(), runner.r.dist.end());
    }
    return m;
}

LongestMap longest_simple(const Graph& g, const BlockCutTree& t, Vertex x) {
    auto r = run_outward(g, t, x, true);
    return {x, std::move(r.dist)};
}

std::vector<Weight> eccentricities(const Graph& g, const BlockCutTree& t) {
    return extreme_distances(g, t, true);
}

std::vector<Weight> elongations(const Graph& g, const BlockCutTree& t) {
    return extreme_distances(g, t, false);
}

SpanningTreeResult min_height_spanning_tree(const Graph& g, const BlockCutTree& t) {
    SpanningTreeResult r;
    auto ecc = eccentricities(g, t);
    Vertex center = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (ecc[v] < ecc[center]) center = v;
    r.root = center;
    r.height = ecc[center];

    // the one block edge unused by the shortest-path forest is the
    // antipodal edge; deleting it preserves every distance from the center
    auto paths = run_outward(g, t, center, false, /*full=*/true);
    std::vector<char> used(g.edge_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (paths.pred_edge[v] >= 0) used[paths.pred_edge[v]] = 1;
    for (const Block& b : t.blocks) {
        if (b.kind != BlockKind::cycle) continue;
        for (int e : b.edge_ids)
            if (!used[e]) {
                r.deleted_edges.push_back(g.edge(e));
                break;
            }
    }
    return r;
}

SpanningTreeResult max_height_spanning_tree(const Graph& g, const BlockCutTree& t) {
    SpanningTreeResult r;
    const int n = g.vertex_count();
    auto el = elongations(g, t);
    Vertex v0 = 0;
    for (Vertex v = 1; v < n; ++v)
        if (el[v] > el[v0]) v0 = v;
    r.root = v0;
    r.height = el[v0];
    if (t.root < 0) return r;

    auto paths = run_outward(g, t, v0, true, /*track_blocks=*/true);
    Vertex far = 0;
    for (Vertex v = 1; v < n; ++v)
        if (paths.dist[v] > paths.dist[far]) far = v;

    // mark the maximum height path block by block: within each traversed
    // cycle the chosen arc is the longer one from the block's gateway (ties
    // along the stored orientation, matching the distance computation)
    std::vector<char> on_path(g.edge_count(), 0);
    for (Vertex cur = far; cur != v0;) {
        int bid = paths.home_block[cur];
        const Block& b = t.blocks[bid];
        Vertex gate = paths.block_gate[bid];
        if (b.kind == BlockKind::edge) {
            on_path[b.edge_ids[0]] = 1;
        } else {
            const int k = b.size();
            int p = 0;
            while (b.vertices[p] != gate) ++p;
            int i = 0;
            Weight forward = 0, total = 0;
            for (int e : b.edge_ids) total += g.edge_weight(e);
            for (int step = 1; step < k; ++step) {
                forward += g.edge_weight(b.edge_ids[(p + step - 1) % k]);
                if (b.vertices[(p + step) % k] == cur) {
                    i = step;
                    break;
                }
            }
            bool take_cw = forward >= total - forward;
            if (take_cw)
                for (int step = 0; step < i; ++step) on_path[b.edge_ids[(p + step) % k]] = 1;
            else
                for (int step = i; step < k; ++step) on_path[b.edge_ids[(p + step) % k]] = 1;
        }
        cur = gate;
    }
    const std::vector<Vertex>& gateway = paths.block_gate;

    for (const Block& b : t.blocks) {
        if (b.kind != BlockKind::cycle) continue;
        const int k = b.size();
        bool block_on_path = false;
        for (int e : b.edge_ids)
            if (on_path[e]) {
                block_on_path = true;
                break;
            }
        int gpos = 0;
        while (b.vertices[gpos] != gateway[b.id]) ++gpos;
        if (block_on_path) {
            // drop the gateway-incident edge the path does not use
            int slot_next = gpos;                // edge gateway -> next
            int slot_prev = (gpos + k - 1) % k;  // edge prev -> gateway
            int victim = on_path[b.edge_ids[slot_next]] ? b.edge_ids[slot_prev]
                                                        : b.edge_ids[slot_next];
            r.deleted_edges.push_back(g.edge(victim));
        } else {
            // antipodal edge relative to the gateway: both endpoints route
            // away from it under shortest routing (ties along orientation)
            Weight total = 0;
            for (int e : b.edge_ids) total += g.edge_weight(e);
            Weight acc = 0;
            int j = 0;
            for (int i = 1; i < k; ++i) {
                acc += g.edge_weight(b.edge_ids[(gpos + i - 1) % k]);
                if (acc <= total - acc) j = i;
                else break;
            }
            r.deleted_edges.push_back(g.edge(b.edge_ids[(gpos + j) % k]));
        }
    }
    return r;
}

} // namespace cactus
