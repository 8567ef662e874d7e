#include "cactus/selection.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>

namespace cactus {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

void require_cactus(const BlockCutTree& t, const Graph& g) {
    if (g.vertex_count() > 1 && t.root < 0) throw GraphError("graph is not a cactus");
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------------------
// minimum dominating set
//
// Three states per vertex: IN (in the set), DOM (outside, already dominated
// by its processed subtree or a processed neighbor), NEED (outside, must be
// dominated later). Each block folds into its entry point in processing
// order; the chain over a cycle's non-entry vertices is conditioned on the
// entry's membership and on whether the block dominates the entry.
// ---------------------------------------------------------------------------

struct MdsSolver {
    static constexpr int IN = 0, DOM = 1, NEED = 2;
    using Acc = std::array<Weight, 3>;
    // block option when the entry is outside: does the block dominate it?
    struct G {
        Weight e_in = kInf;       // entry in the set
        Weight out_dom = kInf;    // entry outside, dominated from the block
        Weight out_nodom = kInf;  // entry outside, not dominated from the block
    };

    const Graph& g;
    const BlockCutTree& t;
    std::vector<Acc> acc;
    std::vector<Acc> pre;   // per block: entry's acc before that block folded
    std::vector<G> gs;      // per block: fold summary
    std::vector<int> state; // reconstruction output
    std::vector<int> order;

    explicit MdsSolver(const Graph& graph, const BlockCutTree& tree) : g(graph), t(tree) {}

    // chain DP over the cycle positions 1..k-1; both ends adjacent to the
    // entry. Returns minima split by (final-state class, first vertex in).
    struct ChainOut {
        // [first_in][termination]: termination 0 = last IN, 1 = last DOM,
        // 2 = last NEED (only usable when the entry is in the set)
        Weight v[2][3];
    };

    ChainOut run_chain(const Block& b, bool entry_in,
                       std::vector<std::array<std::array<Weight, 3>, 2>>* trace) const {
        const int k = b.size();
        // dp[first_in][s]
        std::array<std::array<Weight, 3>, 2> dp;
        for (auto& row : dp) row = {kInf, kInf, kInf};
        {
            const Acc& a = acc[b.vertices[1]];
            dp[1][IN] = a[IN];
            dp[0][DOM] = a[DOM];
            if (entry_in) dp[0][DOM] = std::min(dp[0][DOM], a[NEED]);
            dp[0][NEED] = a[NEED];
        }
        if (trace) (*trace)[1] = dp;
        for (int i = 2; i <= k - 1; ++i) {
            const Acc& a = acc[b.vertices[i]];
            std::array<std::array<Weight, 3>, 2> nd;
            for (auto& row : nd) row = {kInf, kInf, kInf};
            for (int f = 0; f < 2; ++f) {
                for (int s = 0; s < 3; ++s) {
                    Weight c = dp[f][s];
                    if (c >= kInf) continue;
                    // next IN: always allowed, resolves a NEED on the left
                    nd[f][IN] = std::min(nd[f][IN], c + a[IN]);
                    if (s != NEED) {
                        Weight dom_cost = a[DOM];
                        if (s == IN) dom_cost = std::min(dom_cost, a[NEED]);
                        nd[f][DOM] = std::min(nd[f][DOM], c + dom_cost);
                        nd[f][NEED] = std::min(nd[f][NEED], c + a[NEED]);
                    }
                }
            }
            dp = nd;
            if (trace) (*trace)[i] = dp;
        }
        ChainOut out;
        for (int f = 0; f < 2; ++f)
            for (int s = 0; s < 3; ++s) out.v[f][s] = dp[f][s];
        return out;
    }

    G block_summary(const Block& b) {
        G r;
        if (b.kind == BlockKind::edge) {
            const Acc& a = acc[b.vertices[1]];
            r.e_in = std::min({a[IN], a[DOM], a[NEED]});
            r.out_dom = a[IN];
            r.out_nodom = a[DOM];
            return r;
        }
        ChainOut in = run_chain(b, true, nullptr);
        ChainOut out = run_chain(b, false, nullptr);
        for (int f = 0; f < 2; ++f)
            for (int s = 0; s < 3; ++s) r.e_in = std::min(r.e_in, in.v[f][s]);
        for (int f = 0; f < 2; ++f)
            for (int s = 0; s < 2; ++s) { // NEED at the last position needs the entry in
                Weight c = out.v[f][s];
                if (c >= kInf) continue;
                bool dominates = (f == 1) || (s == IN);
                (dominates ? r.out_dom : r.out_nodom) =
                    std::min(dominates ? r.out_dom : r.out_nodom, c);
            }
        return r;
    }

    static Acc fold(const Acc& p, const G& gval) {
        Acc n;
        n[IN] = p[IN] + gval.e_in;
        n[DOM] = std::min(p[DOM] + std::min(gval.out_dom, gval.out_nodom),
                          p[NEED] + gval.out_dom);
        n[NEED] = p[NEED] + gval.out_nodom;
        for (Weight& w : n) w = std::min(w, kInf);
        return n;
    }

    // root-level combination: condition on the state of vertices[0]
    Weight root_value(const Block& b, int* chosen_state) const {
        const Acc& a0 = acc[b.vertices[0]];
        Weight best = kInf;
        int best_state = IN;
        if (b.kind == BlockKind::edge) {
            const Acc& a1 = acc[b.vertices[1]];
            auto consider = [&](int s, Weight c) {
                if (c < best) {
                    best = c;
                    best_state = s;
                }
            };
            consider(IN, a0[IN] + std::min({a1[IN], a1[DOM], a1[NEED]}));
            consider(DOM, a0[DOM] + std::min(a1[IN], a1[DOM]));
            consider(NEED, a0[NEED] + a1[IN]);
        } else {
            ChainOut in = run_chain(b, true, nullptr);
            ChainOut out = run_chain(b, false, nullptr);
            auto consider = [&](int s, Weight c) {
                if (c < best) {
                    best = c;
                    best_state = s;
                }
            };
            for (int f = 0; f < 2; ++f)
                for (int s = 0; s < 3; ++s)
                    if (in.v[f][s] < kInf) consider(IN, a0[IN] + in.v[f][s]);
            for (int f = 0; f < 2; ++f)
                for (int s = 0; s < 2; ++s) {
                    Weight c = out.v[f][s];
                    if (c >= kInf) continue;
                    bool dominates = (f == 1) || (s == IN);
                    consider(DOM, a0[DOM] + c);
                    if (dominates) consider(NEED, a0[NEED] + c);
                }
        }
        if (chosen_state) *chosen_state = best_state;
        return best;
    }

    // re-run a chain and walk the argmin backwards, assigning states
    void assign_chain(const Block& b, bool entry_in, bool need_dominator, bool allow_last_need) {
        const int k = b.size();
        if (b.kind == BlockKind::edge) {
            const Acc& a = acc[b.vertices[1]];
            int s;
            if (entry_in) {
                s = a[IN] <= a[DOM] ? (a[IN] <= a[NEED] ? IN : NEED)
                                    : (a[DOM] <= a[NEED] ? DOM : NEED);
            } else if (need_dominator) {
                s = IN;
            } else {
                s = DOM;
            }
            state[b.vertices[1]] = s;
            return;
        }
        std::vector<std::array<std::array<Weight, 3>, 2>> trace(k);
        run_chain(b, entry_in, &trace);
        // pick the terminal cell
        Weight best = kInf;
        int bf = 0, bs = 0;
        for (int f = 0; f < 2; ++f)
            for (int s = 0; s < 3; ++s) {
                if (s == NEED && !(entry_in && allow_last_need)) continue;
                Weight c = trace[k - 1][f][s];
                if (c >= kInf) continue;
                if (!entry_in) {
                    bool dominates = (f == 1) || (s == IN);
                    if (dominates != need_dominator) continue;
                }
                if (c < best) {
                    best = c;
                    bf = f;
                    bs = s;
                }
            }
        // walk backwards; the chain's DOM state may consume either the
        // vertex's DOM accumulator or (after an IN neighbor) its NEED
        // accumulator, and the vertex keeps that accumulator-level state
        int f = bf, s = bs;
        for (int i = k - 1; i >= 2; --i) {
            const Acc& a = acc[b.vertices[i]];
            Weight target = trace[i][f][s];
            int chosen_prev = -1, acc_state = -1;
            for (int ps = 0; ps < 3 && chosen_prev < 0; ++ps) {
                Weight c = trace[i - 1][f][ps];
                if (c >= kInf) continue;
                if (s == IN) {
                    if (c + a[IN] == target) {
                        chosen_prev = ps;
                        acc_state = IN;
                    }
                } else if (s == DOM && ps != NEED) {
                    if (c + a[DOM] == target) {
                        chosen_prev = ps;
                        acc_state = DOM;
                    } else if (ps == IN && c + a[NEED] == target) {
                        chosen_prev = ps;
                        acc_state = NEED;
                    }
                } else if (s == NEED && ps != NEED) {
                    if (c + a[NEED] == target) {
                        chosen_prev = ps;
                        acc_state = NEED;
                    }
                }
            }
            state[b.vertices[i]] = acc_state;
            s = chosen_prev;
        }
        {
            // first chain position: its DOM cell may also stand for a NEED
            // accumulator saved by the entry
            const Acc& a = acc[b.vertices[1]];
            Weight target = trace[1][f][s];
            int acc_state = s;
            if (s == DOM && a[DOM] != target) acc_state = NEED; // entry_in rescue
            if (s == IN) acc_state = IN;
            (void)a;
            state[b.vertices[1]] = acc_state;
        }
    }

    VertexSet solve() {
        const int n = g.vertex_count();
        if (n == 1) return {{0}, 1};
        require_cactus(t, g);
        acc.assign(n, Acc{1, kInf, 0});
        pre.assign(t.block_count(), Acc{});
        gs.assign(t.block_count(), G{});
        order = processing_order(t);

        for (int bid : order) {
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            pre[bid] = acc[e];
            gs[bid] = block_summary(b);
            acc[e] = fold(acc[e], gs[bid]);
        }
        int root_state = IN;
        Weight best = root_value(t.blocks[t.root], &root_state);

        // reconstruction: walk blocks root-first, devolving each entry's
        // accumulated state into (earlier state, block condition)
        state.assign(n, -1);
        const Block& rb = t.blocks[t.root];
        state[rb.vertices[0]] = root_state;
        if (root_state == IN) {
            assign_chain(rb, true, false, true);
        } else if (root_state == NEED) {
            assign_chain(rb, false, true, false);
        } else {
            // DOM: pick whichever block condition reproduces the optimum
            Weight need = best - acc[rb.vertices[0]][DOM];
            bool nodom_matches;
            if (rb.kind == BlockKind::edge) {
                nodom_matches = acc[rb.vertices[1]][DOM] == need;
            } else {
                nodom_matches = false;
                ChainOut out = run_chain(rb, false, nullptr);
                for (int f = 0; f < 2; ++f)
                    for (int s = 0; s < 2; ++s)
                        if (out.v[f][s] == need && !((f == 1) || (s == IN))) nodom_matches = true;
            }
            assign_chain(rb, false, !nodom_matches, false);
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int bid = *it;
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            int st = state[e];
            const Acc& p = pre[bid];
            const G& gv = gs[bid];
            Acc post = fold(p, gv);
            if (st == IN) {
                state[e] = IN;
                assign_chain(b, true, false, true);
            } else if (st == NEED) {
                state[e] = NEED;
                assign_chain(b, false, false, false);
            } else {
                // DOM: decompose min(p[DOM]+min(dom,nodom), p[NEED]+dom)
                Weight target = post[DOM];
                if (p[DOM] + gv.out_nodom == target) {
                    state[e] = DOM;
                    assign_chain(b, false, false, false);
                } else if (p[DOM] + gv.out_dom == target) {
                    state[e] = DOM;
                    assign_chain(b, false, true, false);
                } else {
                    state[e] = NEED;
                    assign_chain(b, false, true, false);
                }
            }
        }

        VertexSet r;
        for (Vertex v = 0; v < n; ++v)
            if (state[v] == IN) r.members.push_back(v);
        r.objective = best;
        return r;
    }

    static bool b_is_edge(const Block& b) { return b.kind == BlockKind::edge; }
};

// ---------------------------------------------------------------------------
// maximum independent set (two states, max-plus folds)
// ---------------------------------------------------------------------------

struct MisSolver {
    static constexpr int SIN = 0, SOUT = 1;
    using Acc = std::array<Weight, 2>;

    const Graph& g;
    const BlockCutTree& t;
    std::vector<Acc> acc;
    std::vector<Acc> pre;
    std::vector<Acc> gs; // per block: [entry in, entry out] best interior value
    std::vector<int> state;
    std::vector<int> order;

    explicit MisSolver(const Graph& graph, const BlockCutTree& tree) : g(graph), t(tree) {}

    // dp over chain positions with adjacency; conditioned on entry membership
    Acc chain_values(const Block& b, std::vector<std::array<Weight, 2>>* trace,
                     bool entry_in) const {
        const int k = b.size();
        std::array<Weight, 2> dp;
        {
            const Acc& a = acc[b.vertices[1]];
            dp[SIN] = entry_in ? -kInf : a[SIN];
            dp[SOUT] = a[SOUT];
        }
        if (trace) (*trace)[1] = dp;
        for (int i = 2; i <= k - 1; ++i) {
            const Acc& a = acc[b.vertices[i]];
            std::array<Weight, 2> nd{-kInf, -kInf};
            if (dp[SOUT] > -kInf) nd[SIN] = dp[SOUT] + a[SIN];
            nd[SOUT] = std::max(dp[SIN], dp[SOUT]);
            if (nd[SOUT] > -kInf) nd[SOUT] += a[SOUT];
            if (trace) (*trace)[i] = nd;
            dp = nd;
        }
        // close the cycle: the last vertex is adjacent to the entry
        Acc r{-kInf, -kInf}; // r[0] = entry in, r[1] = entry out (same run)
        if (entry_in) {
            r[0] = dp[SOUT];
        } else {
            r[1] = std::max(dp[SIN], dp[SOUT]);
        }
        return r;
    }

    Acc block_summary(const Block& b) const {
        Acc r{-kInf, -kInf};
        if (b.kind == BlockKind::edge) {
            const Acc& a = acc[b.vertices[1]];
            r[SIN] = a[SOUT];
            r[SOUT] = std::max(a[SIN], a[SOUT]);
            return r;
        }
        r[SIN] = chain_values(b, nullptr, true)[0];
        r[SOUT] = chain_values(b, nullptr, false)[1];
        return r;
    }

    void assign_chain(const Block& b, bool entry_in) {
        if (b.kind == BlockKind::edge) {
            const Acc& a = acc[b.vertices[1]];
            state[b.vertices[1]] = (!entry_in && a[SIN] >= a[SOUT]) ? SIN : SOUT;
            return;
        }
        const int k = b.size();
        std::vector<std::array<Weight, 2>> trace(k);
        chain_values(b, &trace, entry_in);
        int s;
        if (entry_in) s = SOUT;
        else s = trace[k - 1][SIN] >= trace[k - 1][SOUT] ? SIN : SOUT;
        for (int i = k - 1; i >= 2; --i) {
            state[b.vertices[i]] = s;
            const Acc& a = acc[b.vertices[i]];
            Weight target = trace[i][s];
            if (s == SIN) {
                s = SOUT;
            } else {
                s = (trace[i - 1][SIN] > -kInf && trace[i - 1][SIN] + a[SOUT] == target) ? SIN
                                                                                        : SOUT;
            }
        }
        state[b.vertices[1]] = s;
    }

    VertexSet solve() {
        const int n = g.vertex_count();
        if (n == 1) return {{0}, 1};
        require_cactus(t, g);
        acc.assign(n, Acc{1, 0});
        pre.assign(t.block_count(), Acc{});
        gs.assign(t.block_count(), Acc{});
        order = processing_order(t);

        for (int bid : order) {
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            pre[bid] = acc[e];
            gs[bid] = block_summary(b);
            acc[e][SIN] += gs[bid][SIN];
            acc[e][SOUT] += gs[bid][SOUT];
        }
        const Block& rb = t.blocks[t.root];
        const Acc& a0 = acc[rb.vertices[0]];
        Acc rv = block_summary(rb);
        Weight with_in = a0[SIN] + rv[SIN];
        Weight with_out = a0[SOUT] + rv[SOUT];
        Weight best = std::max(with_in, with_out);

        state.assign(n, -1);
        bool root_in = with_in >= with_out;
        state[rb.vertices[0]] = root_in ? SIN : SOUT;
        assign_chain(rb, root_in);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int bid = *it;
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            assign_chain(b, state[e] == SIN);
        }
        VertexSet r;
        for (Vertex v = 0; v < n; ++v)
            if (state[v] == SIN) r.members.push_back(v);
        r.objective = best;
        return r;
    }
};

// ---------------------------------------------------------------------------
// minimum-weight hitting set over a family of cycle blocks (all cycles for
// the feedback vertex set, odd cycles for the 2-colorable problems): every
// target block must contain at least one picked vertex. No adjacency
// constraints, so folds only need a forced-pick correction per block.
// ---------------------------------------------------------------------------

struct HittingSolver {
    const Graph& g;
    const BlockCutTree& t;
    const std::vector<Weight>& cost; // pick cost per vertex
    bool odd_only;                   // target = odd cycle blocks only

    std::vector<std::array<Weight, 2>> acc; // [picked, free]
    std::vector<char> picked;

    HittingSolver(const Graph& graph, const BlockCutTree& tree, const std::vector<Weight>& c,
                  bool odd)
        : g(graph), t(tree), cost(c), odd_only(odd) {}

    bool target(const Block& b) const {
        return b.kind == BlockKind::cycle && (!odd_only || b.size() % 2 == 1);
    }

    VertexSet solve() {
        const int n = g.vertex_count();
        VertexSet r;
        if (n == 1) return r;
        require_cactus(t, g);
        acc.assign(n, {});
        for (Vertex v = 0; v < n; ++v) acc[v] = {cost[v], 0};
        picked.assign(n, 0);
        auto order = processing_order(t);

        std::vector<std::array<Weight, 2>> pre(t.block_count());
        std::vector<std::array<Weight, 2>> gs(t.block_count()); // [entry picked, entry free]

        auto summary = [&](const Block& b) {
            std::array<Weight, 2> out{0, 0};
            Weight sum_any = 0, min_delta = kInf;
            for (size_t i = 1; i < b.vertices.size(); ++i) {
                const auto& a = acc[b.vertices[i]];
                sum_any += std::min(a[0], a[1]);
                min_delta = std::min(min_delta, a[0] - std::min(a[0], a[1]));
            }
            out[0] = sum_any;
            out[1] = target(b) ? sum_any + min_delta : sum_any;
            return out;
        };

        for (int bid : order) {
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            pre[bid] = acc[e];
            gs[bid] = summary(b);
            acc[e] = {acc[e][0] + gs[bid][0], acc[e][1] + gs[bid][1]};
        }
        const Block& rb = t.blocks[t.root];
        auto rg = summary(rb);
        Vertex r0 = rb.vertices[0];
        Weight with_pick = acc[r0][0] + rg[0];
        Weight with_free = acc[r0][1] + rg[1];
        Weight best = std::min(with_pick, with_free);

        // reconstruction: ties prefer not picking
        std::vector<int> state(n, -1);
        state[r0] = with_free <= with_pick ? 1 : 0;
        auto assign_block = [&](const Block& b, bool entry_picked) {
            bool any_picked = false;
            for (size_t i = 1; i < b.vertices.size(); ++i) {
                const auto& a = acc[b.vertices[i]];
                bool pick = a[0] < a[1]; // ties prefer free
                state[b.vertices[i]] = pick ? 0 : 1;
                any_picked |= pick;
            }
            if (target(b) && !entry_picked && !any_picked) {
                // force the cheapest surcharge (first minimum)
                Weight min_delta = kInf;
                int forced = -1;
                for (size_t i = 1; i < b.vertices.size(); ++i) {
                    const auto& a = acc[b.vertices[i]];
                    Weight d = a[0] - std::min(a[0], a[1]);
                    if (d < min_delta) {
                        min_delta = d;
                        forced = static_cast<int>(i);
                    }
                }
                state[b.vertices[forced]] = 0;
            }
        };
        assign_block(rb, state[r0] == 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int bid = *it;
            if (bid == t.root) continue;
            assign_block(t.blocks[bid], state[t.entry_point[bid]] == 0);
        }
        for (Vertex v = 0; v < n; ++v)
            if (state[v] == 0) r.members.push_back(v);
        r.objective = best;
        return r;
    }
};

// 2-colors the remainder after removing `removed`; the class containing the
// smallest vertex of each component goes to s1
TwoPartition two_color_remainder(const Graph& g, const std::vector<Vertex>& removed) {
    TwoPartition tp;
    std::vector<char> gone(g.vertex_count(), 0);
    for (Vertex v : removed) gone[v] = 1;
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || color[s] != -1) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            (color[v] == 0 ? tp.s1 : tp.s2).push_back(v);
            for (auto& a : g.neighbors(v)) {
                if (gone[a.to] || color[a.to] != -1) continue;
                color[a.to] = color[v] ^ 1;
                q.push(a.to);
            }
        }
    }
    std::sort(tp.s1.begin(), tp.s1.end());
    std::sort(tp.s2.begin(), tp.s2.end());
    return tp;
}

} // namespace

VertexSet min_dominating_set(const Graph& g, const BlockCutTree& t) {
    MdsSolver solver(g, t);
    VertexSet r = solver.solve();
    r.members = sorted(std::move(r.members));
    return r;
}

VertexSet max_independent_set(const Graph& g, const BlockCutTree& t) {
    MisSolver solver(g, t);
    VertexSet r = solver.solve();
    r.members = sorted(std::move(r.members));
    return r;
}

VertexSet min_weight_fvs(const Graph& g, const BlockCutTree& t) {
    HittingSolver solver(g, t, g.vertex_weights(), false);
    VertexSet r = solver.solve();
    r.members = sorted(std::move(r.members));
    return r;
}

TwoPartition max_2_independent_set(const Graph& g, const BlockCutTree& t) {
    std::vector<Weight> unit(g.vertex_count(), 1);
    HittingSolver solver(g, t, unit, true);
    VertexSet removed = solver.solve();
    TwoPartition tp = two_color_remainder(g, removed.members);
    tp.objective = g.vertex_count() - removed.objective;
    return tp;
}

TwoPartition max_weight_2_colorable(const Graph& g, const BlockCutTree& t) {
    HittingSolver solver(g, t, g.vertex_weights(), true);
    VertexSet removed = solver.solve();
    TwoPartition tp = two_color_remainder(g, removed.members);
    tp.objective = g.total_vertex_weight() - removed.objective;
    return tp;
}

} // namespace cactus
