#include "cactus/labelling.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace cactus {

namespace {

// Per-vertex sets of labels already committed around a vertex: neighbor
// vertex labels for L(2,1)/L(0,1), incident edge labels for (2,1)-total.
// Only cutvertices are ever queried across blocks, but the sets are cheap.
class LabelPool {
public:
    explicit LabelPool(int n) : used_(n), cursor_(n, 0) {}

    bool contains(Vertex v, int x) const { return used_[v].count(x) > 0; }
    void insert(Vertex v, int x) { used_[v].insert(x); }

    // smallest free value around v, skipping the closed band [lo, hi];
    // the band must be the same on every call for a given v
    int allocate(Vertex v, int lo, int hi) {
        int x = cursor_[v];
        while ((x >= lo && x <= hi) || used_[v].count(x)) ++x;
        cursor_[v] = x + 1;
        used_[v].insert(x);
        return x;
    }

    // the `count` smallest free values around v (does not consume)
    void peek(Vertex v, int lo, int hi, int count, std::vector<int>& out,
              const std::vector<int>& extra_forbidden) const {
        out.clear();
        for (int x = 0; static_cast<int>(out.size()) < count; ++x) {
            if (x >= lo && x <= hi) continue;
            if (used_[v].count(x)) continue;
            if (std::find(extra_forbidden.begin(), extra_forbidden.end(), x) !=
                extra_forbidden.end())
                continue;
            out.push_back(x);
        }
    }

private:
    std::vector<std::unordered_set<int>> used_;
    std::vector<int> cursor_;
};

int busiest_vertex(const Graph& g, const Block& b) {
    Vertex best = b.vertices[0];
    for (Vertex v : b.vertices)
        if (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best))
            best = v;
    return best;
}

int span_of(const std::vector<int>& labels) {
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    return *hi - *lo;
}

// ---------------------------------------------------------------------------
// L(2,1)
// ---------------------------------------------------------------------------

// cycle patterns of span 4: the classic period-3 pattern with a tail fixup
std::vector<int> l21_cycle_pattern(int k) {
    std::vector<int> p;
    p.reserve(k);
    int tail = (k % 3 == 0) ? 0 : (k % 3 == 1 ? 4 : 5);
    for (int i = 0; i < k - tail; ++i) p.push_back(2 * (i % 3));
    if (tail == 4) p.insert(p.end(), {0, 3, 1, 4});
    if (tail == 5) p.insert(p.end(), {0, 2, 4, 1, 3});
    return p;
}

struct L21Builder {
    const Graph& g;
    const BlockCutTree& t;
    LabellingStats* stats;
    int palette_max; // labels live in [0, palette_max]
    std::vector<int> labels;
    LabelPool pool;

    L21Builder(const Graph& graph, const BlockCutTree& tree, LabellingStats* st)
        : g(graph), t(tree), stats(st), palette_max(max_degree(graph) + 3),
          labels(graph.vertex_count(), -1), pool(graph.vertex_count()) {}

    void commit_block(const Block& b) {
        for (int e : b.edge_ids) {
            auto [u, v] = g.edge(e);
            if (t.is_cutvertex[u]) pool.insert(u, labels[v]);
            if (t.is_cutvertex[v]) pool.insert(v, labels[u]);
        }
    }

    bool ok_pair(int a, int b, int req) const { return std::abs(a - b) >= req; }

    void label_root(const Block& b) {
        if (b.kind == BlockKind::edge) {
            Vertex hub = busiest_vertex(g, b);
            Vertex other = b.vertices[0] == hub ? b.vertices[1] : b.vertices[0];
            labels[hub] = 0;
            labels[other] = 2;
            return;
        }
        const int k = b.size();
        auto pattern = l21_cycle_pattern(k);
        Vertex start = busiest_vertex(g, b);
        int pos = 0;
        while (b.vertices[pos] != start) ++pos;
        for (int i = 0; i < k; ++i) labels[b.vertices[(pos + i) % k]] = pattern[i];
    }

    // per-block constructive pass; falls back to bounded backtracking
    void label_child(const Block& b) {
        Vertex e = t.entry_point[b.id];
        const int L = labels[e];
        const int lo = L - 1, hi = L + 1;
        const int k = b.size();

        if (b.kind == BlockKind::edge) {
            int x = pool.allocate(e, lo, hi);
            if (x > palette_max) throw GraphError("internal labelling defect: L(2,1) palette exhausted");
            labels[b.vertices[1]] = x;
            commit_block(b);
            return;
        }

        std::vector<int> peeked;
        if (k == 3) {
            // any three free values contain a pair differing by two
            pool.peek(e, lo, hi, 3, peeked, {});
            int a = peeked[0];
            int c = (peeked[1] - a >= 2) ? peeked[1] : peeked[2];
            if (c > palette_max) throw GraphError("internal labelling defect: L(2,1) palette exhausted");
            labels[b.vertices[1]] = a;
            labels[b.vertices[2]] = c;
            pool.insert(e, a);
            pool.insert(e, c);
            commit_block(b);
            return;
        }

        // k >= 4: allocate the first entry neighbor, fill greedily, close
        // the last two positions jointly
        std::vector<int> tentative(k, -1); // position -> label, 0 is entry
        tentative[0] = L;
        pool.peek(e, lo, hi, 1, peeked, {});
        tentative[1] = peeked[0];
        bool ok = true;
        for (int i = 2; i <= k - 3 && ok; ++i) {
            int prev = tentative[i - 1], prev2 = tentative[i - 2];
            int x = 0;
            while (x <= palette_max &&
                   (!ok_pair(x, prev, 2) || x == prev2 || (i == 2 && x == L)))
                ++x;
            if (x > palette_max) ok = false;
            else tentative[i] = x;
        }
        if (ok) ok = close_cycle(b, tentative);
        if (!ok) {
            if (stats) ++stats->repair_blocks;
            if (!repair_block(b, tentative))
                throw GraphError("internal labelling defect: L(2,1) block unlabelable in palette");
        }
        for (int i = 1; i < k; ++i) labels[b.vertices[i]] = tentative[i];
        pool.insert(e, tentative[1]);
        pool.insert(e, tentative[k - 1]);
        commit_block(b);
    }

    // joint choice of positions k-2 and k-1
    bool close_cycle(const Block& b, std::vector<int>& tentative) const {
        const int k = b.size();
        Vertex e = t.entry_point[b.id];
        const int L = labels[e];
        const int a = tentative[1];
        const int p3 = tentative[k - 3]; // k == 4: this is the entry label L
        const int p4 = (k >= 5) ? tentative[k - 4] : -1;

        std::vector<int> ys;
        pool.peek(e, L - 1, L + 1, 12, ys, {a});
        int best_x = -1, best_y = -1, best_max = std::numeric_limits<int>::max();
        int tried = 0;
        for (int x = 0; x <= palette_max && tried < 14; ++x) {
            if (!ok_pair(x, p3, 2) || x == L) continue;
            if (k >= 5 && x == p4) continue;
            if (k == 4 && !ok_pair(x, a, 2)) continue;
            ++tried;
            for (int y : ys) {
                if (y > palette_max) break;
                if (!ok_pair(y, x, 2) || y == tentative[k - 3] || y == a) continue;
                if (std::max(x, y) < best_max) {
                    best_max = std::max(x, y);
                    best_x = x;
                    best_y = y;
                }
                break; // ys ascends; the first valid y is the best for this x
            }
        }
        if (best_x < 0) return false;
        tentative[k - 2] = best_x;
        tentative[k - 1] = best_y;
        return true;
    }

    // bounded exhaustive search over the whole block within the palette
    bool repair_block(const Block& b, std::vector<int>& tentative) {
        const int k = b.size();
        Vertex e = t.entry_point[b.id];
        const int L = labels[e];
        long long budget = 2'000'000;
        std::vector<int> val(k, -1);
        val[0] = L;
        auto valid = [&](int i, int x) {
            if (!ok_pair(x, val[i - 1], 2)) return false;
            if (i >= 2 && x == val[i - 2]) return false;
            if (i == 2 && x == L) return false;
            if (i == 1 && (pool.contains(e, x) || !ok_pair(x, L, 2))) return false;
            if (i == k - 1) {
                if (pool.contains(e, x) || !ok_pair(x, L, 2)) return false;
                if (x == val[1]) return false;
                if (!ok_pair(x, L, 2)) return false;
            }
            if (i == k - 2 && x == L) return false;
            return true;
        };
        int i = 1;
        std::vector<int> next(k, 0);
        while (i >= 1) {
            if (stats && ++stats->repair_steps < 0) {}
            if (--budget < 0) return false;
            bool placed = false;
            for (int& x = next[i]; x <= palette_max; ++x) {
                if (valid(i, x)) {
                    val[i] = x;
                    ++x;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                next[i] = 0;
                val[i] = -1;
                --i;
                continue;
            }
            if (i == k - 1) {
                for (int j = 1; j < k; ++j) tentative[j] = val[j];
                return true;
            }
            ++i;
        }
        return false;
    }

    // two cycles sharing one cutvertex admit span 5; a direct search finds it
    bool try_two_cycle_join() {
        if (t.block_count() != 2 || g.vertex_count() > 64) return false;
        if (t.blocks[0].kind != BlockKind::cycle || t.blocks[1].kind != BlockKind::cycle)
            return false;
        const int n = g.vertex_count();
        const int target = max_degree(g) + 1; // 5
        // order: root cycle then the second cycle's remaining vertices
        std::vector<Vertex> order;
        for (Vertex v : t.blocks[t.root].vertices) order.push_back(v);
        for (Vertex v : t.blocks[1 - t.root].vertices)
            if (v != t.entry_point[1 - t.root]) order.push_back(v);
        // constraint table
        std::vector<std::vector<std::pair<int, int>>> req(n); // (other, min diff)
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            auto [u, v] = g.edge(eid);
            req[u].emplace_back(v, 2);
            req[v].emplace_back(u, 2);
        }
        for (Vertex w = 0; w < n; ++w) {
            auto nb = g.neighbors(w);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    req[nb[i].to].emplace_back(nb[j].to, 1);
                    req[nb[j].to].emplace_back(nb[i].to, 1);
                }
        }
        std::vector<int> val(n, -1), next(n, 0);
        long long budget = 4'000'000;
        int depth = 0;
        while (depth >= 0) {
            if (--budget < 0) return false;
            if (depth == n) break;
            Vertex v = order[depth];
            bool placed = false;
            for (int& x = next[depth]; x <= target; ++x) {
                bool good = true;
                for (auto [o, r] : req[v])
                    if (val[o] >= 0 && std::abs(val[o] - x) < r) {
                        good = false;
                        break;
                    }
                if (good) {
                    val[v] = x;
                    ++x;
                    placed = true;
                    break;
                }
            }
            if (placed)

                ++depth;
            else {
                next[depth] = 0;
                val[v] = -1;
                --depth;
                if (depth >= 0) val[order[depth]] = -1;
            }
        }
        if (depth < 0) return false;
        labels = val;
        return true;
    }

    VertexLabelling run() {
        if (g.vertex_count() == 1) return {{0}, 0};
        if (try_two_cycle_join()) return {labels, span_of(labels)};
        auto order = processing_order(t);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Block& b = t.blocks[*it];
            if (*it == t.root) {
                label_root(b);
                commit_block(b);
            } else {
                label_child(b);
            }
        }
        return {labels, span_of(labels)};
    }
};

// ---------------------------------------------------------------------------
// L(0,1): only vertices with a common neighbor must differ
// ---------------------------------------------------------------------------

struct L01Builder {
    const Graph& g;
    const BlockCutTree& t;
    int palette_max;
    std::vector<int> labels;
    LabelPool pool;

    L01Builder(const Graph& graph, const BlockCutTree& tree)
        : g(graph), t(tree), palette_max(std::max(0, max_degree(graph))),
          labels(graph.vertex_count(), -1), pool(graph.vertex_count()) {}

    void commit_block(const Block& b) {
        for (int e : b.edge_ids) {
            auto [u, v] = g.edge(e);
            if (t.is_cutvertex[u]) pool.insert(u, labels[v]);
            if (t.is_cutvertex[v]) pool.insert(v, labels[u]);
        }
    }

    // smallest cyclic labelling with x_i != x_{i+2 mod k} (plus all-distinct
    // for triangles): alphabet {0,1} works iff 4 | k, else {0,1,2}
    static bool try_cycle_pattern(int k, int alphabet, std::vector<int>& out) {
        // condition on the first two values, then sweep with parent pointers
        for (int a0 = 0; a0 < alphabet; ++a0)
            for (int a1 = 0; a1 < alphabet; ++a1) {
                std::vector<std::array<std::array<signed char, 3>, 3>> par(k);
                std::array<std::array<char, 3>, 3> ok{}, next{};
                ok[a0][a1] = 1;
                for (int i = 2; i < k; ++i) {
                    for (auto& row : next) row.fill(0);
                    for (int p2 = 0; p2 < alphabet; ++p2)
                        for (int p1 = 0; p1 < alphabet; ++p1) {
                            if (!ok[p2][p1]) continue;
                            for (int x = 0; x < alphabet; ++x) {
                                if (x == p2) continue;
                                if (i == k - 2 && x == a0) continue;
                                if (i == k - 1 && x == a1) continue;
                                if (!next[p1][x]) {
                                    next[p1][x] = 1;
                                    par[i][p1][x] = static_cast<signed char>(p2);
                                }
                            }
                        }
                    ok = next;
                }
                for (int p1 = 0; p1 < alphabet; ++p1)
                    for (int x = 0; x < alphabet; ++x) {
                        if (!ok[p1][x]) continue;
                        out.assign(k, 0);
                        int cur = x, prev = p1;
                        for (int i = k - 1; i >= 2; --i) {
                            out[i] = cur;
                            int pp = par[i][prev][cur];
                            cur = prev;
                            prev = pp;
                        }
                        out[0] = a0;
                        out[1] = a1;
                        return true;
                    }
            }
        return false;
    }

    std::vector<int> cycle_pattern(int k) const {
        if (k == 3) return {0, 1, 2};
        std::vector<int> p;
        if (k % 4 == 0 && try_cycle_pattern(k, 2, p)) return p;
        if (try_cycle_pattern(k, 3, p)) return p;
        throw GraphError("internal labelling defect: L(0,1) cycle pattern");
    }

    void label_root(const Block& b) {
        if (b.kind == BlockKind::edge) {
            labels[b.vertices[0]] = 0;
            labels[b.vertices[1]] = 0;
            return;
        }
        auto p = cycle_pattern(b.size());
        for (int i = 0; i < b.size(); ++i) labels[b.vertices[i]] = p[i];
    }

    void label_child(const Block& b) {
        Vertex e = t.entry_point[b.id];
        const int L = labels[e];
        const int k = b.size();
        std::vector<int> peeked;
        if (b.kind == BlockKind::edge) {
            // no band: a pendant vertex may reuse the entry's label
            labels[b.vertices[1]] = pool.allocate(e, 1, 0);
            check(labels[b.vertices[1]]);
            commit_block(b);
            return;
        }
        if (k == 3) {
            pool.peek(e, 1, 0, 2, peeked, {L});
            labels[b.vertices[1]] = peeked[0];
            labels[b.vertices[2]] = peeked[1];
            check(peeked[1]);
            pool.insert(e, peeked[0]);
            pool.insert(e, peeked[1]);
            commit_block(b);
            return;
        }
        pool.peek(e, 1, 0, 1, peeked, {});
        const int a = peeked[0];
        labels[b.vertices[1]] = a;
        for (int i = 2; i <= k - 2; ++i) {
            int prev2 = labels[b.vertices[i - 2]];
            int x = 0;
            while (x == prev2 || (i == 2 && x == L) || (i == k - 2 && x == L)) ++x;
            labels[b.vertices[i]] = x;
            check(x);
        }
        pool.peek(e, 1, 0, 1, peeked, {a, labels[b.vertices[k - 3]]});
        labels[b.vertices[k - 1]] = peeked[0];
        check(peeked[0]);
        pool.insert(e, a);
        pool.insert(e, peeked[0]);
        commit_block(b);
    }

    void check(int x) const {
        if (x > palette_max)
            throw GraphError("internal labelling defect: L(0,1) palette exhausted");
    }

    VertexLabelling run() {
        if (g.vertex_count() == 1) return {{0}, 0};
        auto order = processing_order(t);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Block& b = t.blocks[*it];
            if (*it == t.root) {
                label_root(b);
                commit_block(b);
            } else {
                label_child(b);
            }
        }
        return {labels, span_of(labels)};
    }
};

// ---------------------------------------------------------------------------
// (2,1)-total
// ---------------------------------------------------------------------------

struct T21Builder {
    const Graph& g;
    const BlockCutTree& t;
    LabellingStats* stats;
    int palette_max;
    std::vector<int> vl; // vertex labels
    std::vector<int> el; // edge labels by edge id
    LabelPool edge_pool; // committed edge labels per vertex

    T21Builder(const Graph& graph, const BlockCutTree& tree, LabellingStats* st)
        : g(graph), t(tree), stats(st), palette_max(max_degree(graph) + 2),
          vl(graph.vertex_count(), -1), el(graph.edge_count(), -1),
          edge_pool(graph.vertex_count()) {}

    void commit_block(const Block& b) {
        for (int e : b.edge_ids) {
            auto [u, v] = g.edge(e);
            if (t.is_cutvertex[u]) edge_pool.insert(u, el[e]);
            if (t.is_cutvertex[v]) edge_pool.insert(v, el[e]);
        }
    }

    static bool far2(int a, int b) { return std::abs(a - b) >= 2; }

    void label_root(const Block& b) {
        if (b.kind == BlockKind::edge) {
            Vertex hub = busiest_vertex(g, b);
            Vertex other = b.vertices[0] == hub ? b.vertices[1] : b.vertices[0];
            vl[hub] = 0;
            if (g.degree(hub) == 1) { // a lone edge
                vl[other] = 1;
                el[b.edge_ids[0]] = 3;
            } else {
                vl[other] = 4;
                el[b.edge_ids[0]] = 2;
            }
            return;
        }
        const int k = b.size();
        Vertex start = busiest_vertex(g, b);
        int pos = 0;
        while (b.vertices[pos] != start) ++pos;
        auto vset = [&](int i, int x) { vl[b.vertices[(pos + i) % k]] = x; };
        auto eset = [&](int i, int x) { el[b.edge_ids[(pos + i) % k]] = x; };
        if (k % 2 == 0) {
            for (int i = 0; i < k; ++i) vset(i, i % 2);
            for (int i = 0; i < k; ++i) eset(i, 3 + i % 2);
            return;
        }
        if (k % 3 == 0) {
            for (int i = 0; i < k; ++i) vset(i, 2 * (i % 3));
            for (int i = 0; i < k; ++i) eset(i, 2 * ((i + 2) % 3));
            return;
        }
        // odd, not a multiple of three: chain DP over (vertex, edge) pairs
        // in the span-4 palette, conditioned on the first pair
        if (!root_cycle_dp(b, pos))
            throw GraphError("internal labelling defect: (2,1)-total root cycle");
    }

    bool root_cycle_dp(const Block& b, int pos) {
        const int k = b.size();
        // states: (vertex label v_i, edge label e_i of edge i -> i+1)
        struct Cell {
            int prev_v = -1, prev_e = -1;
        };
        for (int v0 = 0; v0 <= 4; ++v0) {
            for (int e0 = 0; e0 <= 4; ++e0) {
                if (!far2(v0, e0)) continue;
                std::vector<std::array<std::array<Cell, 5>, 5>> par(k);
                std::vector<std::array<std::array<char, 5>, 5>> ok(
                    k, std::array<std::array<char, 5>, 5>{});
                ok[0][v0][e0] = 1;
                for (int i = 1; i < k; ++i) {
                    for (int pv = 0; pv <= 4; ++pv)
                        for (int pe = 0; pe <= 4; ++pe) {
                            if (!ok[i - 1][pv][pe]) continue;
                            for (int v = 0; v <= 4; ++v) {
                                if (v == pv || !far2(v, pe)) continue;
                                for (int e = 0; e <= 4; ++e) {
                                    if (e == pe || !far2(e, v)) continue;
                                    if (i == k - 1) {
                                        // closing edge e is (c_{k-1}, c_0)
                                        if (!far2(e, v0) || e == e0 || v == v0) continue;
                                    }
                                    if (!ok[i][v][e]) {
                                        ok[i][v][e] = 1;
                                        par[i][v][e] = {pv, pe};
                                    }
                                }
                            }
                        }
                }
                for (int v = 0; v <= 4; ++v)
                    for (int e = 0; e <= 4; ++e) {
                        if (!ok[k - 1][v][e]) continue;
                        int cv = v, ce = e;
                        for (int i = k - 1; i >= 1; --i) {
                            vl[b.vertices[(pos + i) % k]] = cv;
                            el[b.edge_ids[(pos + i) % k]] = ce;
                            Cell c = par[i][cv][ce];
                            cv = c.prev_v;
                            ce = c.prev_e;
                        }
                        vl[b.vertices[pos]] = v0;
                        el[b.edge_ids[pos]] = e0;
                        return true;
                    }
            }
        }
        return false;
    }

    void label_child(const Block& b) {
        Vertex e = t.entry_point[b.id];
        const int L = vl[e];
        const int lo = L - 1, hi = L + 1;
        const int k = b.size();
        std::vector<int> peeked;

        if (b.kind == BlockKind::edge) {
            int f = edge_pool.allocate(e, lo, hi);
            int u = 0;
            while (u == L || !far2(u, f)) ++u;
            if (f > palette_max || u > palette_max)
                throw GraphError("internal labelling defect: (2,1)-total palette exhausted");
            el[b.edge_ids[0]] = f;
            vl[b.vertices[1]] = u;
            commit_block(b);
            return;
        }

        // tentative per-position values; slot i holds (vertex c_i, edge
        // c_i -> c_{i+1}); edge slot k-1 closes back to the entry
        std::vector<int> tv(k, -1), te(k, -1);
        tv[0] = L;
        edge_pool.peek(e, lo, hi, 1, peeked, {});
        te[0] = peeked[0];
        bool ok = true;
        {
            int x = 0;
            while (x == L || !far2(x, te[0])) ++x;
            tv[1] = x;
        }
        for (int i = 2; i <= k - 2 && ok; ++i) {
            // choose edge (i-1 -> i) and vertex i
            int best_e = -1, best_v = -1, best_max = std::numeric_limits<int>::max();
            for (int f = 0; f <= palette_max; ++f) {
                if (f == te[i - 2] || !far2(f, tv[i - 1])) continue;
                int x = 0;
                while (x <= palette_max && (x == tv[i - 1] || !far2(x, f) ||
                                            (i == k - 2 && x == L) || (i == 2 && false)))
                    ++x;
                if (x > palette_max) continue;
                if (std::max(f, x) < best_max) {
                    best_max = std::max(f, x);
                    best_e = f;
                    best_v = x;
                }
                if (best_max <= 4) break; // already as small as it gets
            }
            if (best_e < 0) ok = false;
            else {
                te[i - 1] = best_e;
                tv[i] = best_v;
            }
        }
        if (ok) ok = close_cycle(b, tv, te);
        if (!ok) {
            if (stats) ++stats->repair_blocks;
            if (!repair_block(b, tv, te))
                throw GraphError("internal labelling defect: (2,1)-total block unlabelable");
        }
        for (int i = 1; i < k; ++i) vl[b.vertices[i]] = tv[i];
        for (int i = 0; i < k; ++i) el[b.edge_ids[i]] = te[i];
        edge_pool.insert(e, te[0]);
        edge_pool.insert(e, te[k - 1]);
        commit_block(b);
    }

    // jointly choose vertex k-1 and its two edges
    bool close_cycle(const Block& b, std::vector<int>& tv, std::vector<int>& te) const {
        const int k = b.size();
        Vertex e = t.entry_point[b.id];
        const int L = vl[e];
        std::vector<int> closers;
        edge_pool.peek(e, L - 1, L + 1, 12, closers, {te[0]});
        int tried = 0;
        for (int y = 0; y <= palette_max && tried < 14; ++y) { // vertex k-1
            if (y == tv[k - 2] || y == L) continue;
            ++tried;
            for (int f2 = 0; f2 <= palette_max; ++f2) { // edge (k-2, k-1)
                if (f2 == te[k - 3] || !far2(f2, tv[k - 2]) || !far2(f2, y)) continue;
                for (int f1 : closers) { // edge (k-1, e)
                    if (f1 > palette_max) break;
                    if (f1 == f2 || !far2(f1, y)) continue;
                    tv[k - 1] = y;
                    te[k - 2] = f2;
                    te[k - 1] = f1;
                    return true;
                }
            }
        }
        return false;
    }

    bool repair_block(const Block& b, std::vector<int>& tv, std::vector<int>& te) {
        const int k = b.size();
        Vertex e = t.entry_point[b.id];
        const int L = vl[e];
        // slots: e0, v1, e1, v2, ..., v_{k-1}, e_{k-1}
        const int slots = 2 * k - 1;
        std::vector<int> val(slots, -1), next(slots, 0);
        long long budget = 2'000'000;
        auto valid = [&](int slot, int x) {
            if (slot % 2 == 0) { // edge slot: edge index slot/2
                int ei = slot / 2;
                int va = ei == 0 ? L : val[2 * ei - 1];
                if (!far2(x, va)) return false;
                if (ei == 0) return !edge_pool.contains(e, x);
                if (x == val[2 * (ei - 1)]) return false; // adjacent edge
                if (ei == k - 1) {
                    if (edge_pool.contains(e, x) || x == val[0] || !far2(x, L)) return false;
                }
                return true;
            }
            int vi = (slot + 1) / 2; // vertex index
            int prev_v = vi == 1 ? L : val[2 * vi - 3];
            if (x == prev_v) return false;
            if (!far2(x, val[2 * vi - 2])) return false; // its earlier edge
            if (vi == k - 1 && x == L) return false;
            return true;
        };
        int i = 0;
        while (i >= 0) {
            if (--budget < 0) return false;
            bool placed = false;
            for (int& x = next[i]; x <= palette_max; ++x) {
                if (valid(i, x)) {
                    val[i] = x;
                    ++x;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                next[i] = 0;
                val[i] = -1;
                --i;
                continue;
            }
            if (i == slots - 1) {
                te[0] = val[0];
                for (int vi = 1; vi < k; ++vi) tv[vi] = val[2 * vi - 1];
                for (int ei = 1; ei < k; ++ei) te[ei] = val[2 * ei];
                return true;
            }
            ++i;
        }
        return false;
    }

    TotalLabelling run() {
        if (g.vertex_count() == 1) return {{0}, {}, 0};
        auto order = processing_order(t);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Block& b = t.blocks[*it];
            if (*it == t.root) {
                label_root(b);
                commit_block(b);
            } else {
                label_child(b);
            }
        }
        int lo = vl[0], hi = vl[0];
        for (int x : vl) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        for (int x : el) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return {vl, el, hi - lo};
    }
};

// ---------------------------------------------------------------------------
// validators
// ---------------------------------------------------------------------------

void require_total(const Graph& g, const std::vector<int>& labels, const char* what) {
    if (static_cast<int>(labels.size()) != g.vertex_count())
        throw GraphError(std::string(what) + ": labelling is not total over the vertices");
    for (int x : labels)
        if (x < 0) throw GraphError(std::string(what) + ": negative or missing label");
}

// pairs of vertices joined by a path of length two must differ; report each
// offending pair once per shared neighborhood
void check_neighborhood_distinct(const Graph& g, const std::vector<int>& labels,
                                 std::vector<std::string>& out) {
    std::vector<std::pair<int, Vertex>> scratch;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        auto nb = g.neighbors(w);
        if (nb.size() < 2) continue;
        scratch.clear();
        for (auto& a : nb) scratch.emplace_back(labels[a.to], a.to);
        std::sort(scratch.begin(), scratch.end());
        for (size_t i = 1; i < scratch.size(); ++i)
            if (scratch[i].first == scratch[i - 1].first)
                out.push_back("vertices " + std::to_string(scratch[i - 1].second) + " and " +
                              std::to_string(scratch[i].second) + " share neighbor " +
                              std::to_string(w) + " but both have label " +
                              std::to_string(scratch[i].first));
    }
}

} // namespace

VertexLabelling label_l21(const Graph& g, const BlockCutTree& t, LabellingStats* stats) {
    L21Builder builder(g, t, stats);
    return builder.run();
}

VertexLabelling label_l01(const Graph& g, const BlockCutTree& t, LabellingStats*) {
    L01Builder builder(g, t);
    return builder.run();
}

TotalLabelling label_t21(const Graph& g, const BlockCutTree& t, LabellingStats* stats) {
    T21Builder builder(g, t, stats);
    return builder.run();
}

std::vector<std::string> validate_l21(const Graph& g, const VertexLabelling& lab) {
    require_total(g, lab.labels, "L(2,1)");
    std::vector<std::string> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (std::abs(lab.labels[u] - lab.labels[v]) < 2)
            out.push_back("adjacent vertices " + std::to_string(u) + " and " +
                          std::to_string(v) + " have labels closer than 2");
    }
    check_neighborhood_distinct(g, lab.labels, out);
    return out;
}

std::vector<std::string> validate_l01(const Graph& g, const VertexLabelling& lab) {
    require_total(g, lab.labels, "L(0,1)");
    std::vector<std::string> out;
    check_neighborhood_distinct(g, lab.labels, out);
    return out;
}

std::vector<std::string> validate_t21(const Graph& g, const TotalLabelling& lab) {
    require_total(g, lab.vertex_labels, "(2,1)-total");
    if (static_cast<int>(lab.edge_labels.size()) != g.edge_count())
        throw GraphError("(2,1)-total: labelling is not total over the edges");
    for (int x : lab.edge_labels)
        if (x < 0) throw GraphError("(2,1)-total: negative or missing edge label");
    std::vector<std::string> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (lab.vertex_labels[u] == lab.vertex_labels[v])
            out.push_back("adjacent vertices " + std::to_string(u) + " and " +
                          std::to_string(v) + " have equal labels");
        for (Vertex w : {u, v})
            if (std::abs(lab.vertex_labels[w] - lab.edge_labels[e]) < 2)
                out.push_back("vertex " + std::to_string(w) + " and its edge (" +
                              std::to_string(u) + "," + std::to_string(v) +
                              ") have labels closer than 2");
    }
    std::vector<std::pair<int, int>> scratch;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        auto nb = g.neighbors(w);
        if (nb.size() < 2) continue;
        scratch.clear();
        for (auto& a : nb) scratch.emplace_back(lab.edge_labels[a.edge], a.edge);
        std::sort(scratch.begin(), scratch.end());
        for (size_t i = 1; i < scratch.size(); ++i)
            if (scratch[i].first == scratch[i - 1].first)
                out.push_back("edges sharing vertex " + std::to_string(w) +
                              " have equal label " + std::to_string(scratch[i].first));
    }
    return out;
}

} // namespace cactus
