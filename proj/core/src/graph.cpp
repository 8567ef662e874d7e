#include "cactus/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cactus {

// keeps any n-term path or weight sum far from int64 overflow
constexpr Weight kMaxWeight = 1'000'000'000'000LL;

Graph Graph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                        std::vector<Weight> edge_weights,
                        std::vector<Weight> vertex_weights) {
    if (n < 1) throw ParseError("graph must have at least one vertex");
    if (edge_weights.empty()) edge_weights.assign(edges.size(), 1);
    if (edge_weights.size() != edges.size())
        throw ParseError("edge weight list does not match edge list");
    if (vertex_weights.empty()) vertex_weights.assign(n, 1);
    if (static_cast<int>(vertex_weights.size()) != n)
        throw ParseError("vertex_weights has " + std::to_string(vertex_weights.size()) +
                         " entries, expected " + std::to_string(n));

    for (size_t i = 0; i < edges.size(); ++i) {
        auto& [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge " + std::to_string(i) + ": unknown vertex id");
        if (u == v) throw ParseError("edge " + std::to_string(i) + ": self-loop at vertex " +
                                     std::to_string(u));
        if (edge_weights[i] <= 0)
            throw ParseError("edge " + std::to_string(i) + ": non-positive weight " +
                             std::to_string(edge_weights[i]));
        if (edge_weights[i] > kMaxWeight)
            throw ParseError("edge " + std::to_string(i) + ": weight above 10^12");
        if (u > v) std::swap(u, v);
    }
    for (int v = 0; v < n; ++v) {
        if (vertex_weights[v] < 0)
            throw ParseError("vertex " + std::to_string(v) + ": negative weight");
        if (vertex_weights[v] > kMaxWeight)
            throw ParseError("vertex " + std::to_string(v) + ": weight above 10^12");
    }

    // sort edges (with their weights) into canonical order, then reject duplicates
    std::vector<int> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return edges[a] < edges[b]; });

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    g.edge_weights_.reserve(edges.size());
    for (int idx : order) {
        if (!g.edges_.empty() && g.edges_.back() == edges[idx])
            throw ParseError("duplicate edge (" + std::to_string(edges[idx].first) + "," +
                             std::to_string(edges[idx].second) + ")");
        g.edges_.push_back(edges[idx]);
        g.edge_weights_.push_back(edge_weights[idx]);
    }
    g.vertex_weights_ = std::move(vertex_weights);

    g.adj_offset_.assign(n + 1, 0);
    for (auto& [u, v] : g.edges_) {
        ++g.adj_offset_[u + 1];
        ++g.adj_offset_[v + 1];
    }
    for (int v = 0; v < n; ++v) g.adj_offset_[v + 1] += g.adj_offset_[v];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[cursor[u]++] = {v, e};
        g.adj_[cursor[v]++] = {u, e};
    }
    // edges are sorted, so each adjacency list is sorted by neighbor id already
    return g;
}

Weight Graph::total_vertex_weight() const {
    Weight s = 0;
    for (Weight w : vertex_weights_) s += w;
    return s;
}

int Graph::find_edge(Vertex u, Vertex v) const {
    for (auto& a : neighbors(u))
        if (a.to == v) return a.edge;
    return -1;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto& a : neighbors(v)) {
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++count;
                stack.push_back(a.to);
            }
        }
    }
    return count == n_;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph parse_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    long long n = j["n"].get<long long>();
    if (n < 1 || n > (1LL << 30)) throw ParseError("\"n\" out of range");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> ew;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        size_t i = 0;
        for (auto& item : j["edges"]) {
            if (!item.is_array() || (item.size() != 2 && item.size() != 3))
                throw ParseError("edge " + std::to_string(i) + ": expected [u,v] or [u,v,w]");
            for (auto& field : item)
                if (!field.is_number_integer())
                    throw ParseError("edge " + std::to_string(i) + ": entries must be integers");
            edges.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
            ew.push_back(item.size() == 3 ? item[2].get<Weight>() : 1);
            ++i;
        }
    }
    std::vector<Weight> vw;
    if (j.contains("vertex_weights")) {
        if (!j["vertex_weights"].is_array()) throw ParseError("\"vertex_weights\" must be an array");
        for (auto& w : j["vertex_weights"]) {
            if (!w.is_number_integer()) throw ParseError("vertex_weights entries must be integers");
            vw.push_back(w.get<Weight>());
        }
    }
    Graph g = Graph::from_edges(static_cast<int>(n), std::move(edges), std::move(ew), std::move(vw));
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    return g;
}

std::string serialize_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({u, v, g.edge_weight(e)});
    }
    j["edges"] = std::move(edges);
    j["vertex_weights"] = g.vertex_weights();
    return j.dump();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.vertex_weight(v) != 1) out << " [weight=" << g.vertex_weight(v) << "]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << "  " << u << " -- " << v;
        if (g.edge_weight(e) != 1) out << " [label=" << g.edge_weight(e) << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cactus
