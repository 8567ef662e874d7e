// Minimum 2-neighbourhood covering set: every edge (x,y) must have a chosen
// vertex z with hop distances d(x,z) <= 2 and d(y,z) <= 2 (weights ignored).
//
// Dynamic programming over the block-cut tree. Each vertex carries one of
// six states (t, d): t = hop distance from the vertex to the nearest chosen
// vertex inside its processed subtree (0 = chosen itself, capped at 3), and
// d = an unmet demand "a chosen vertex within hop distance d must exist
// outside the subtree" (d is always 1 when present; deeper needs are either
// satisfiable inside or dead). Folding a block into its entry point turns
// the block's uncovered near-entry edges and unmet vertex demands into
// entry demands of radius 0 or 1; radius 0 is met only by a chosen entry.
//
// Cycle blocks are evaluated exhaustively over the per-position state
// choices when that is cheap. Long cycles condition on the four seam
// positions (the only ones within hop distance two of the entry) and run a
// path DP over the middle, whose pending demands die unless served by the
// very next position.

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "cactus/selection.hpp"

namespace cactus {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
constexpr int kNoDemand = 9;

constexpr int kT[6] = {0, 1, 2, 3, 2, 3};
constexpr int kD[6] = {kNoDemand, kNoDemand, kNoDemand, kNoDemand, 1, 1};

int state_index(int t, int d) { return d == kNoDemand ? t : (t == 2 ? 4 : 5); }

using Acc = std::array<Weight, 6>;

// block fold summary: cost by (t_b in {1,2,3}, exported demand in {0,1,none})
struct BlockResult {
    std::array<std::array<Weight, 3>, 3> cost;

    BlockResult() {
        for (auto& row : cost) row = {kInf, kInf, kInf};
    }
    void offer(int t_b, int dem, Weight c) {
        Weight& slot = cost[t_b - 1][dem == kNoDemand ? 2 : dem];
        slot = std::min(slot, c);
    }
};

Acc fold(const Acc& pre, const BlockResult& res) {
    Acc out;
    out.fill(kInf);
    for (int sp = 0; sp < 6; ++sp) {
        if (pre[sp] >= kInf) continue;
        const int tp = kT[sp], dp = kD[sp];
        for (int tb = 1; tb <= 3; ++tb) {
            for (int di = 0; di < 3; ++di) {
                Weight cb = res.cost[tb - 1][di];
                if (cb >= kInf) continue;
                int db = di == 2 ? kNoDemand : di;
                int dp_left = (dp != kNoDemand && tb <= dp) ? kNoDemand : dp;
                int db_left = (db != kNoDemand && tp <= db) ? kNoDemand : db;
                if (db_left == 0) continue; // only a chosen entry could serve it
                int nt = std::min(tp, tb);
                int nd = std::min(dp_left, db_left);
                if (nd != kNoDemand && nt <= nd) continue;
                Weight& slot = out[state_index(nt, nd)];
                slot = std::min(slot, pre[sp] + cb);
            }
        }
    }
    return out;
}

struct SeamAssignment {
    int s1, s2, sk2, sk1;
    std::vector<int> mid; // states of positions 3..k-3
};

struct TwoNcSolver {
    const Graph& g;
    const BlockCutTree& t;

    std::vector<Acc> acc;
    std::vector<Acc> pre;
    std::vector<BlockResult> results;
    std::vector<int> order;

    std::vector<int> cur;          // state walking backwards through folds
    std::vector<Weight> cur_cost;

    TwoNcSolver(const Graph& graph, const BlockCutTree& tree) : g(graph), t(tree) {}

    std::vector<int> live_states(Vertex v) const {
        std::vector<int> out;
        for (int s = 0; s < 6; ++s)
            if (acc[v][s] < kInf) out.push_back(s);
        return out;
    }

    // ---- exhaustive evaluation ------------------------------------------
    template <typename F>
    void enumerate_block(const Block& b, F&& visit) const {
        const int k = b.size();
        const int m = k - 1;
        std::vector<std::vector<int>> live(m);
        for (int i = 0; i < m; ++i) live[i] = live_states(b.vertices[i + 1]);
        std::vector<int> idx(m, 0), xs(m), ds(m);
        auto cyc = [&](int a, int b2) {
            int d = std::abs(a - b2);
            return std::min(d, k - d);
        };
        while (true) {
            Weight cost = 0;
            for (int i = 0; i < m; ++i) {
                int s = live[i][idx[i]];
                xs[i] = kT[s];
                ds[i] = kD[s];
                cost += acc[b.vertices[i + 1]][s];
            }
            bool feasible = true;
            int t_b = 3, dem = kNoDemand;
            for (int j = 1; j < k; ++j) t_b = std::min(t_b, std::min(cyc(0, j) + xs[j - 1], 3));
            for (int a = 0; a < k && feasible; ++a) {
                int b2 = (a + 1) % k;
                bool covered = false;
                for (int j = 1; j < k; ++j)
                    if (cyc(a, j) + xs[j - 1] <= 2 && cyc(b2, j) + xs[j - 1] <= 2) {
                        covered = true;
                        break;
                    }
                if (covered) continue;
                int req = 2 - std::max(cyc(0, a), cyc(0, b2));
                if (req < 0) feasible = false;
                else dem = std::min(dem, req);
            }
            for (int i = 1; i < k && feasible; ++i) {
                if (ds[i - 1] == kNoDemand) continue;
                int nearest = 4;
                for (int j = 1; j < k; ++j)
                    if (j != i) nearest = std::min(nearest, cyc(i, j) + xs[j - 1]);
                if (nearest <= ds[i - 1]) continue;
                int req = ds[i - 1] - cyc(0, i);
                if (req < 0) feasible = false;
                else dem = std::min(dem, req);
            }
            if (feasible && !visit(idx, live, cost, std::max(t_b, 1), dem)) return;
            int i = 0;
            for (; i < m; ++i) {
                if (++idx[i] < static_cast<int>(live[i].size())) break;
                idx[i] = 0;
            }
            if (i == m) return;
        }
    }

    long long combo_count(const Block& b) const {
        long long prod = 1;
        for (size_t i = 1; i < b.vertices.size(); ++i) {
            prod *= static_cast<long long>(live_states(b.vertices[i]).size());
            if (prod > 4096) return prod;
        }
        return prod;
    }

    BlockResult eval_edge_block(const Block& b) const {
        BlockResult r;
        const Acc& a = acc[b.vertices[1]];
        for (int s = 0; s < 6; ++s) {
            if (a[s] >= kInf) continue;
            int dem = kNoDemand;
            if (kT[s] > 1) dem = 1;
            if (kD[s] != kNoDemand) dem = std::min(dem, kD[s] - 1);
            r.offer(std::min(kT[s] + 1, 3), dem, a[s]);
        }
        return r;
    }

    // ---- seam evaluation for long cycles ---------------------------------
    // target: when non-null, stop at the first closure matching it and fill
    // *assignment (used only during reconstruction).
    struct Target {
        int t_b, dem;
        Weight cost;
    };

    bool run_seam(const Block& b, BlockResult* out, const Target* target,
                  SeamAssignment* assignment) const {
        const int k = b.size();
        const Vertex v1 = b.vertices[1], v2 = b.vertices[2];
        const Vertex vk2 = b.vertices[k - 2], vk1 = b.vertices[k - 1];
        auto key = [](int a, int u, int v, int p) { return ((a * 2 + u) * 3 + v) * 2 + p; };

        const int mid_len = k - 5; // positions 3..k-3
        std::vector<std::array<Weight, 48>> dp(mid_len + 1);
        // parent pointers (only when reconstructing): {prev key, state}
        std::vector<std::array<std::pair<int, int>, 48>> par;
        if (target) par.resize(mid_len + 1);

        for (int s1 : live_states(v1)) {
            for (int s2 : live_states(v2)) {
                const int x1 = kT[s1], x2 = kT[s2];
                const Weight head_cost = acc[v1][s1] + acc[v2][s2];
                int head_dem = kNoDemand;
                if (kD[s1] != kNoDemand && x2 != 0) head_dem = 0; // only a chosen entry helps
                const bool pend_s2 = kD[s2] != kNoDemand && x1 != 0;
                const bool edge12_open = !(x1 <= 1 || x2 <= 1);

                for (int branch = 0; branch < (edge12_open ? 2 : 1); ++branch) {
                    int seed_dem = head_dem;
                    bool pend_seed = pend_s2;
                    if (edge12_open) {
                        if (branch == 1) seed_dem = std::min(seed_dem, 0);
                        else pend_seed = true;
                    }
                    dp[0].fill(kInf);
                    int seed_key = key(std::min(std::min(x2, x1 + 1), 3), x1 == 0 ? 1 : 0,
                                       std::min(x2, 2), pend_seed ? 1 : 0);
                    dp[0][seed_key] = head_cost;

                    for (int step = 1; step <= mid_len; ++step) {
                        const Acc& ap = acc[b.vertices[2 + step]];
                        dp[step].fill(kInf);
                        if (target) par[step].fill({-1, -1});
                        for (int a = 0; a <= 3; ++a)
                            for (int u = 0; u <= 1; ++u)
                                for (int v = 0; v <= 2; ++v)
                                    for (int pe = 0; pe <= 1; ++pe) {
                                        Weight c = dp[step - 1][key(a, u, v, pe)];
                                        if (c >= kInf) continue;
                                        for (int s = 0; s < 6; ++s) {
                                            if (ap[s] >= kInf) continue;
                                            int x = kT[s];
                                            if (pe && x != 0) continue;
                                            bool pend = !(u == 1 || v <= 1 || x <= 1);
                                            if (kD[s] != kNoDemand && a + 1 > 1) pend = true;
                                            int nk = key(std::min(std::min(a + 1, x), 3),
                                                         v == 0 ? 1 : 0, std::min(x, 2),
                                                         pend ? 1 : 0);
                                            if (c + ap[s] < dp[step][nk]) {
                                                dp[step][nk] = c + ap[s];
                                                if (target)
                                                    par[step][nk] = {key(a, u, v, pe), s};
                                            }
                                        }
                                    }
                    }

                    for (int sk2 : live_states(vk2)) {
                        for (int sk1 : live_states(vk1)) {
                            const int xk2 = kT[sk2], xk1 = kT[sk1];
                            const Weight tail_cost = acc[vk2][sk2] + acc[vk1][sk1];
                            for (int a = 0; a <= 3; ++a)
                                for (int u = 0; u <= 1; ++u)
                                    for (int v = 0; v <= 2; ++v)
                                        for (int pe = 0; pe <= 1; ++pe) {
                                            Weight c = dp[mid_len][key(a, u, v, pe)];
                                            if (c >= kInf) continue;
                                            if (pe && xk2 != 0) continue;
                                            // dead needs first
                                            if (!(u == 1 || v <= 1 || xk2 <= 1 || xk1 == 0))
                                                continue; // edge (k-3, k-2)
                                            if (kD[sk2] != kNoDemand && !(a == 0 || xk1 == 0))
                                                continue;
                                            int dem = seed_dem;
                                            if (!(x1 <= 1 || x2 == 0 || xk1 == 0))
                                                dem = std::min(dem, 1); // edge (e, c1)
                                            if (!(v == 0 || xk2 <= 1 || xk1 <= 1))
                                                dem = std::min(dem, 0); // edge (k-2, k-1)
                                            if (!(xk2 == 0 || xk1 <= 1 || x1 == 0))
                                                dem = std::min(dem, 1); // edge (k-1, e)
                                            if (kD[sk1] != kNoDemand && xk2 != 0)
                                                dem = std::min(dem, 0);
                                            int t_b = std::min(
                                                {x1 + 1, x2 + 2, xk1 + 1, xk2 + 2, 3});
                                            Weight total = c + tail_cost;
                                            if (out) out->offer(t_b, dem, total);
                                            if (target && t_b == target->t_b &&
                                                dem == target->dem && total == target->cost) {
                                                assignment->s1 = s1;
                                                assignment->s2 = s2;
                                                assignment->sk2 = sk2;
                                                assignment->sk1 = sk1;
                                                assignment->mid.assign(mid_len, -1);
                                                int kk = key(a, u, v, pe);
                                                for (int step = mid_len; step >= 1; --step) {
                                                    assignment->mid[step - 1] =
                                                        par[step][kk].second;
                                                    kk = par[step][kk].first;
                                                }
                                                return true;
                                            }
                                        }
                        }
                    }
                }
            }
        }
        return false;
    }

    BlockResult eval_block(const Block& b) const {
        BlockResult r;
        if (b.kind == BlockKind::edge) return eval_edge_block(b);
        if (b.size() <= 12 && combo_count(b) <= 4096) {
            enumerate_block(b, [&](const std::vector<int>&, const std::vector<std::vector<int>>&,
                                   Weight cost, int t_b, int dem) {
                r.offer(t_b, dem, cost);
                return true;
            });
            return r;
        }
        run_seam(b, &r, nullptr, nullptr);
        return r;
    }

    void assign_block(const Block& b, int t_b, int db, Weight cost) {
        if (b.kind == BlockKind::edge) {
            const Acc& a = acc[b.vertices[1]];
            for (int s = 0; s < 6; ++s) {
                if (a[s] >= kInf || a[s] != cost) continue;
                int dem = kNoDemand;
                if (kT[s] > 1) dem = 1;
                if (kD[s] != kNoDemand) dem = std::min(dem, kD[s] - 1);
                if (std::min(kT[s] + 1, 3) == t_b && dem == db) {
                    set_state(b.vertices[1], s);
                    return;
                }
            }
            throw GraphError("internal: 2nc edge reconstruction failed");
        }
        if (b.size() <= 12 && combo_count(b) <= 4096) {
            bool found = false;
            enumerate_block(b, [&](const std::vector<int>& idx,
                                   const std::vector<std::vector<int>>& live, Weight c,
                                   int tb2, int d2) {
                if (c == cost && tb2 == t_b && d2 == db) {
                    for (size_t i = 1; i < b.vertices.size(); ++i)
                        set_state(b.vertices[i], live[i - 1][idx[i - 1]]);
                    found = true;
                    return false;
                }
                return true;
            });
            if (!found) throw GraphError("internal: 2nc cycle reconstruction failed");
            return;
        }
        Target target{t_b, db, cost};
        SeamAssignment sa;
        if (!run_seam(b, nullptr, &target, &sa))
            throw GraphError("internal: 2nc seam reconstruction failed");
        const int k = b.size();
        set_state(b.vertices[1], sa.s1);
        set_state(b.vertices[2], sa.s2);
        for (int i = 0; i < k - 5; ++i) set_state(b.vertices[3 + i], sa.mid[i]);
        set_state(b.vertices[k - 2], sa.sk2);
        set_state(b.vertices[k - 1], sa.sk1);
    }

    void set_state(Vertex v, int s) {
        cur[v] = s;
        cur_cost[v] = acc[v][s];
    }

    void devolve(int bid, Vertex e) {
        const Acc& p = pre[bid];
        const BlockResult& res = results[bid];
        const int pt = kT[cur[e]], pd = kD[cur[e]];
        const Weight post_cost = cur_cost[e];
        for (int sp = 0; sp < 6; ++sp) {
            if (p[sp] >= kInf) continue;
            int tp = kT[sp], dp = kD[sp];
            for (int tb = 1; tb <= 3; ++tb)
                for (int di = 0; di < 3; ++di) {
                    Weight cb = res.cost[tb - 1][di];
                    if (cb >= kInf || p[sp] + cb != post_cost) continue;
                    int db = di == 2 ? kNoDemand : di;
                    int dp_left = (dp != kNoDemand && tb <= dp) ? kNoDemand : dp;
                    int db_left = (db != kNoDemand && tp <= db) ? kNoDemand : db;
                    if (db_left == 0) continue;
                    int nt = std::min(tp, tb);
                    int nd = std::min(dp_left, db_left);
                    if (nd != kNoDemand && nt <= nd) continue;
                    if (nt != pt || nd != pd) continue;
                    assign_block(t.blocks[bid], tb, db, cb);
                    cur[e] = sp;
                    cur_cost[e] = p[sp];
                    return;
                }
        }
        throw GraphError("internal: 2nc fold devolution failed");
    }

    VertexSet solve() {
        const int n = g.vertex_count();
        if (n == 1) return {{}, 0};
        if (t.root < 0) throw GraphError("graph is not a cactus");
        acc.assign(n, Acc{});
        for (Vertex v = 0; v < n; ++v) {
            acc[v].fill(kInf);
            acc[v][0] = 1;
            acc[v][3] = 0;
        }
        pre.assign(t.block_count(), Acc{});
        results.assign(t.block_count(), BlockResult{});
        order = processing_order(t);

        for (int bid : order) {
            if (bid == t.root) continue;
            const Block& b = t.blocks[bid];
            Vertex e = t.entry_point[bid];
            pre[bid] = acc[e];
            results[bid] = eval_block(b);
            acc[e] = fold(acc[e], results[bid]);
        }
        const Block& rb = t.blocks[t.root];
        Vertex r0 = rb.vertices[0];
        pre[t.root] = acc[r0];
        results[t.root] = eval_block(rb);
        Acc final_acc = fold(acc[r0], results[t.root]);
        Weight best = kInf;
        int best_state = -1;
        for (int s = 0; s < 4; ++s) { // demand-free states only
            if (final_acc[s] < best) {
                best = final_acc[s];
                best_state = s;
            }
        }
        if (best_state < 0) throw GraphError("internal: 2nc found no feasible assignment");

        cur.assign(n, -1);
        cur_cost.assign(n, 0);
        cur[r0] = best_state;
        cur_cost[r0] = best;
        devolve(t.root, r0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (*it == t.root) continue;
            devolve(*it, t.entry_point[*it]);
        }

        VertexSet out;
        for (Vertex v = 0; v < n; ++v)
            if (kT[cur[v]] == 0) out.members.push_back(v);
        out.objective = best;
        return out;
    }
};

} // namespace

VertexSet min_2nc_set(const Graph& g, const BlockCutTree& t) {
    TwoNcSolver solver(g, t);
    return solver.solve();
}

} // namespace cactus
