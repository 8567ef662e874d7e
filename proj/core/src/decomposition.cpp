#include "cactus/decomposition.hpp"

#include <algorithm>
#include <queue>

namespace cactus {

namespace {

// Classifies a popped component and derives the cyclic vertex order.
// nb1/nb2/stamp are n-sized scratch arrays reused across blocks.
Block make_block(const Graph& g, int id, std::vector<int> edge_ids,
                 std::vector<Vertex>& nb1, std::vector<Vertex>& nb2,
                 std::vector<int>& stamp, int stamp_value) {
    Block b;
    b.id = id;
    b.edge_ids = std::move(edge_ids);
    std::sort(b.edge_ids.begin(), b.edge_ids.end());

    for (int e : b.edge_ids) {
        auto [u, v] = g.edge(e);
        for (Vertex x : {u, v}) {
            if (stamp[x] != stamp_value) {
                stamp[x] = stamp_value;
                nb1[x] = -1;
                nb2[x] = -1;
                b.vertices.push_back(x);
            }
        }
        (nb1[u] == -1 ? nb1[u] : nb2[u]) = v;
        (nb1[v] == -1 ? nb1[v] : nb2[v]) = u;
    }

    size_t k = b.vertices.size();
    if (b.edge_ids.size() == 1) {
        b.kind = BlockKind::edge;
        std::sort(b.vertices.begin(), b.vertices.end());
        return b;
    }
    if (b.edge_ids.size() != k) {
        // biconnected but neither an edge nor a cycle
        b.kind = BlockKind::other;
        std::sort(b.vertices.begin(), b.vertices.end());
        return b;
    }

    b.kind = BlockKind::cycle;
    // walk the cycle from its lowest vertex toward the lower-id neighbor
    Vertex start = *std::min_element(b.vertices.begin(), b.vertices.end());
    std::vector<Vertex> order;
    order.reserve(k);
    Vertex prev = start;
    Vertex cur = std::min(nb1[start], nb2[start]);
    order.push_back(start);
    while (cur != start) {
        order.push_back(cur);
        Vertex next = (nb1[cur] == prev) ? nb2[cur] : nb1[cur];
        prev = cur;
        cur = next;
    }
    b.vertices = std::move(order);
    return b;
}

} // namespace

std::pair<std::vector<Block>, std::vector<Vertex>> find_blocks(const Graph& g) {
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    const int n = g.vertex_count();

    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), iter(n, 0);
    std::vector<Vertex> dfs_stack;
    std::vector<int> edge_stack;
    std::vector<Block> blocks;

    std::vector<Vertex> nb1(n), nb2(n);
    std::vector<int> stamp(n, -1);
    int stamp_value = 0;

    int timer = 0;
    disc[0] = low[0] = timer++;
    dfs_stack.push_back(0);
    while (!dfs_stack.empty()) {
        Vertex v = dfs_stack.back();
        auto nbrs = g.neighbors(v);
        if (iter[v] < static_cast<int>(nbrs.size())) {
            auto a = nbrs[iter[v]++];
            if (a.edge == parent_edge[v]) continue;
            if (disc[a.to] == -1) {
                parent_edge[a.to] = a.edge;
                edge_stack.push_back(a.edge);
                disc[a.to] = low[a.to] = timer++;
                dfs_stack.push_back(a.to);
            } else if (disc[a.to] < disc[v]) {
                edge_stack.push_back(a.edge);
                low[v] = std::min(low[v], disc[a.to]);
            }
        } else {
            dfs_stack.pop_back();
            if (parent_edge[v] == -1) continue;
            auto [x, y] = g.edge(parent_edge[v]);
            Vertex u = (x == v) ? y : x;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                std::vector<int> component;
                while (true) {
                    int e = edge_stack.back();
                    edge_stack.pop_back();
                    component.push_back(e);
                    if (e == parent_edge[v]) break;
                }
                blocks.push_back(make_block(g, static_cast<int>(blocks.size()),
                                            std::move(component), nb1, nb2, stamp,
                                            stamp_value++));
            }
        }
    }

    std::vector<int> membership(n, 0);
    for (const Block& b : blocks)
        for (Vertex v : b.vertices) ++membership[v];
    std::vector<Vertex> cutvertices;
    for (Vertex v = 0; v < n; ++v)
        if (membership[v] >= 2) cutvertices.push_back(v);
    return {std::move(blocks), std::move(cutvertices)};
}

CactusReport is_cactus(const Graph& g) {
    auto [blocks, cuts] = find_blocks(g);
    for (const Block& b : blocks) {
        if (b.kind == BlockKind::other) {
            // every edge of a biconnected non-cycle block lies on two simple
            // cycles; report the smallest one
            auto [u, v] = g.edge(b.edge_ids.front());
            std::pair<Vertex, Vertex> witness{u, v};
            for (int e : b.edge_ids) witness = std::min(witness, g.edge(e));
            return {false, witness};
        }
    }
    return {true, std::nullopt};
}

BlockCutTree build_tbc(const Graph& g, std::vector<Block> blocks,
                       const std::vector<Vertex>& cutvertices) {
    for (const Block& b : blocks)
        if (b.kind == BlockKind::other) throw GraphError("graph is not a cactus");

    BlockCutTree t;
    const int n = g.vertex_count();
    const int nb = static_cast<int>(blocks.size());
    t.blocks = std::move(blocks);
    t.parent.assign(nb, -1);
    t.entry_point.assign(nb, -1);
    t.level.assign(nb, 0);
    t.is_cutvertex.assign(n, 0);
    for (Vertex c : cutvertices) t.is_cutvertex[c] = 1;

    // flat vertex -> blocks index
    t.vertex_block_offset.assign(n + 1, 0);
    for (const Block& b : t.blocks)
        for (Vertex v : b.vertices) ++t.vertex_block_offset[v + 1];
    for (int v = 0; v < n; ++v) t.vertex_block_offset[v + 1] += t.vertex_block_offset[v];
    t.vertex_block_ids.resize(t.vertex_block_offset[n]);
    {
        std::vector<int> cursor(t.vertex_block_offset.begin(), t.vertex_block_offset.end() - 1);
        for (const Block& b : t.blocks) // ascending block ids per vertex
            for (Vertex v : b.vertices) t.vertex_block_ids[cursor[v]++] = b.id;
    }
    for (Block& b : t.blocks) {
        for (Vertex v : b.vertices)
            if (t.is_cutvertex[v]) b.cutvertices_in_block.push_back(v);
        std::sort(b.cutvertices_in_block.begin(), b.cutvertices_in_block.end());
    }
    if (nb == 0) {
        t.child_offset.assign(1, 0);
        return t; // single-vertex graph
    }

    t.root = 0;
    for (const Block& b : t.blocks) {
        if (b.cutvertices_in_block.size() >= 2) {
            t.root = b.id;
            break;
        }
    }

    // breadth-first layering over block adjacency via shared cutvertices;
    // each cutvertex is expanded once (all blocks sharing it are mutually
    // adjacent, so the first expansion places every one of them)
    std::vector<char> visited(nb, 0);
    std::vector<char> expanded(n, 0);
    std::queue<int> q;
    q.push(t.root);
    visited[t.root] = 1;
    while (!q.empty()) {
        int bid = q.front();
        q.pop();
        for (Vertex c : t.blocks[bid].cutvertices_in_block) {
            if (expanded[c]) continue;
            expanded[c] = 1;
            for (int other : t.blocks_of(c)) {
                if (!visited[other]) {
                    visited[other] = 1;
                    t.parent[other] = bid;
                    t.entry_point[other] = c;
                    t.level[other] = t.level[bid] + 1;
                    q.push(other);
                }
            }
        }
    }
    // flat children index, ascending by construction
    t.child_offset.assign(nb + 1, 0);
    for (int b = 0; b < nb; ++b)
        if (t.parent[b] >= 0) ++t.child_offset[t.parent[b] + 1];
    for (int b = 0; b < nb; ++b) t.child_offset[b + 1] += t.child_offset[b];
    t.child_ids.resize(nb - 1);
    {
        std::vector<int> cursor(t.child_offset.begin(), t.child_offset.end() - 1);
        for (int b = 0; b < nb; ++b)
            if (t.parent[b] >= 0) t.child_ids[cursor[t.parent[b]]++] = b;
    }

    // canonical vertex order: entry point first (root: lowest id, already in
    // place), cycle direction toward the lower-id neighbor of the start;
    // cycle edge_ids are re-slotted so edge_ids[i] joins vertices[i] and
    // vertices[i+1 mod k]
    std::vector<int> pos(n, -1);
    for (Block& b : t.blocks) {
        Vertex start = (b.id == t.root) ? b.vertices.front() : t.entry_point[b.id];
        if (b.kind == BlockKind::edge) {
            if (b.vertices[0] != start) std::swap(b.vertices[0], b.vertices[1]);
            continue;
        }
        auto it = std::find(b.vertices.begin(), b.vertices.end(), start);
        std::rotate(b.vertices.begin(), it, b.vertices.end());
        if (b.vertices[1] > b.vertices.back())
            std::reverse(b.vertices.begin() + 1, b.vertices.end());

        const int k = b.size();
        for (int i = 0; i < k; ++i) pos[b.vertices[i]] = i;
        std::vector<int> slots(k);
        for (int e : b.edge_ids) {
            auto [u, v] = g.edge(e);
            int i = pos[u], j = pos[v];
            slots[std::abs(i - j) == 1 ? std::min(i, j) : k - 1] = e;
        }
        b.edge_ids = std::move(slots);
    }

    // flat slot weights and vertex lists so traversals read sequentially
    t.slot_offset.assign(nb + 1, 0);
    t.flat_offset.assign(nb + 1, 0);
    for (int b = 0; b < nb; ++b) {
        t.slot_offset[b + 1] = t.slot_offset[b] + static_cast<int>(t.blocks[b].edge_ids.size());
        t.flat_offset[b + 1] = t.flat_offset[b] + t.blocks[b].size();
    }
    t.slot_weights.resize(t.slot_offset[nb]);
    t.flat_vertices.resize(t.flat_offset[nb]);
    t.flat_edge_ids.resize(t.flat_offset[nb]);
    t.flat_is_cut.resize(t.flat_offset[nb]);
    for (int b = 0; b < nb; ++b) {
        Weight* out = t.slot_weights.data() + t.slot_offset[b];
        for (int e : t.blocks[b].edge_ids) *out++ = g.edge_weight(e);
        Vertex* vo = t.flat_vertices.data() + t.flat_offset[b];
        int* eo = t.flat_edge_ids.data() + t.flat_offset[b];
        char* co = t.flat_is_cut.data() + t.flat_offset[b];
        for (int i = 0; i < t.blocks[b].size(); ++i) {
            vo[i] = t.blocks[b].vertices[i];
            eo[i] = t.blocks[b].edge_ids[std::min<size_t>(i, t.blocks[b].edge_ids.size() - 1)];
            co[i] = t.is_cutvertex[vo[i]];
        }
    }
    return t;
}

BlockCutTree decompose(const Graph& g) {
    auto [blocks, cuts] = find_blocks(g);
    return build_tbc(g, std::move(blocks), cuts);
}

std::vector<int> processing_order(const BlockCutTree& t) {
    std::vector<int> order;
    if (t.root < 0) return order;
    order.reserve(t.block_count());
    // children lists are sorted, so this post-order is deterministic
    std::vector<std::pair<int, int>> stack{{t.root, 0}};
    while (!stack.empty()) {
        auto& [bid, idx] = stack.back();
        auto kids = t.children_of(bid);
        if (idx < static_cast<int>(kids.size())) {
            int child = kids[idx++];
            stack.emplace_back(child, 0);
        } else {
            order.push_back(bid);
            stack.pop_back();
        }
    }
    return order;
}

} // namespace cactus
