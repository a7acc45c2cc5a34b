#include "svcfc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0)
        throw input_error("vertex count must be nonnegative");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1])
            throw input_error("duplicate edge (" + std::to_string(edges_[i].first) + ", " +
                              std::to_string(edges_[i].second) + ")");
    }
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
    std::queue<Vertex> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push(src);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
    std::vector<Vertex> order;
    std::queue<Vertex> queue;
    seen[static_cast<size_t>(src)] = true;
    queue.push(src);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push(w);
            }
        }
    }
    return order;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1)
        return true;
    return static_cast<int>(bfs_order(g, 0).size()) == g.num_vertices();
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    int d = bfs_distances(g, u)[static_cast<size_t>(v)];
    if (d < 0)
        return std::nullopt;
    return d;
}

namespace {

// DFS over the layer DAG. Returns false once the cap is exhausted and a
// further path was about to be emitted.
bool collect_paths(const Graph& g, Vertex target, const std::vector<int>& dist_u,
                   const std::vector<int>& dist_v, int total, long long cap, Path& current,
                   ShortestPathEnumeration& out) {
    Vertex at = current.back();
    if (at == target) {
        if (static_cast<long long>(out.paths.size()) == cap) {
            out.overflowed = true;
            return false;
        }
        out.paths.push_back(current);
        return true;
    }
    for (Vertex w : g.neighbors(at)) {
        // w lies on a shortest u-v path through `at` iff it is one layer
        // further from u and closes the remaining distance to v.
        if (dist_u[static_cast<size_t>(w)] != dist_u[static_cast<size_t>(at)] + 1)
            continue;
        if (dist_u[static_cast<size_t>(w)] + dist_v[static_cast<size_t>(w)] != total)
            continue;
        current.push_back(w);
        bool keep_going = collect_paths(g, target, dist_u, dist_v, total, cap, current, out);
        current.pop_back();
        if (!keep_going)
            return false;
    }
    return true;
}

} // namespace

ShortestPathEnumeration enumerate_shortest_paths(const Graph& g, Vertex u, Vertex v,
                                                 long long cap) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw input_error("shortest-path enumeration requires distinct endpoints");
    if (cap <= 0)
        throw input_error("path cap must be positive");
    std::vector<int> dist_u = bfs_distances(g, u);
    if (dist_u[static_cast<size_t>(v)] == -1)
        throw validity_error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                             " are in different components");
    std::vector<int> dist_v = bfs_distances(g, v);
    ShortestPathEnumeration out;
    Path current{u};
    collect_paths(g, v, dist_u, dist_v, dist_u[static_cast<size_t>(v)], cap, current, out);
    return out;
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<Vertex>& deleted) {
    std::vector<bool> gone(static_cast<size_t>(g.num_vertices()), false);
    for (Vertex v : deleted) {
        g.check_vertex(v);
        gone[static_cast<size_t>(v)] = true;
    }
    VertexDeletion result;
    result.old_to_new.assign(static_cast<size_t>(g.num_vertices()), -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!gone[static_cast<size_t>(v)]) {
            result.old_to_new[static_cast<size_t>(v)] = static_cast<int>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : g.edges()) {
        int na = result.old_to_new[static_cast<size_t>(a)];
        int nb = result.old_to_new[static_cast<size_t>(b)];
        if (na != -1 && nb != -1)
            edges.emplace_back(na, nb);
    }
    result.graph = Graph(static_cast<int>(result.new_to_old.size()), edges);
    return result;
}

} // namespace svcfc
