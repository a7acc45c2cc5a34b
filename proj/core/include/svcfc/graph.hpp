#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace svcfc {

using Vertex = int;

// A simple path, stored as its vertex sequence. Consecutive vertices are
// adjacent in the host graph; length = vertices.size() - 1.
using Path = std::vector<Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const = default;

    void check_vertex(Vertex v) const; // throws input_error if out of range

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_; // sorted neighbor lists
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

bool is_connected(const Graph& g);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

// Vertices in BFS discovery order from src (neighbors visited in ascending
// order). Unreachable vertices are omitted.
std::vector<Vertex> bfs_order(const Graph& g, Vertex src);

// Graph distance; nullopt when u and v are in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

struct ShortestPathEnumeration {
    std::vector<Path> paths; // lexicographic by vertex sequence
    bool overflowed = false; // true iff more than `cap` shortest paths exist
};

// All shortest u-v paths, up to cap many, found by DFS over the BFS layer
// DAG between u and v. Path counts can be exponential, hence the cap.
ShortestPathEnumeration enumerate_shortest_paths(const Graph& g, Vertex u, Vertex v,
                                                 long long cap);

struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new; // size = old n; -1 for deleted vertices
    std::vector<Vertex> new_to_old;
};

// Induced subgraph on V \ deleted, with labels compacted order-preservingly.
VertexDeletion delete_vertices(const Graph& g, const std::vector<Vertex>& deleted);

} // namespace svcfc
