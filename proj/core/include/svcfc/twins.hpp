#pragma once

#include <map>
#include <utility>
#include <vector>

#include "svcfc/budget.hpp"
#include "svcfc/graph.hpp"

namespace svcfc {

// Vertex set X such that every edge of G-X joins true twins.
struct TwinCover {
    std::vector<Vertex> vertices; // sorted, distinct

    int size() const { return static_cast<int>(vertices.size()); }
    bool contains(Vertex v) const;
};

TwinCover make_twin_cover(const Graph& g, std::vector<Vertex> vertices);

// Connected component of G-X: always a clique whose members share one
// neighborhood S inside X.
struct TwinClique {
    std::vector<Vertex> vertices;          // sorted
    std::vector<Vertex> neighborhood_in_x; // S, sorted

    int size() const { return static_cast<int>(vertices.size()); }
};

// Type (S, s) of a twin-clique.
using CliqueType = std::pair<std::vector<Vertex>, int>;

struct TwinCliqueDecomposition {
    std::vector<TwinClique> cliques;                  // sorted by minimum vertex
    std::map<CliqueType, std::vector<int>> by_type;   // type -> indices into cliques
};

bool are_true_twins(const Graph& g, Vertex u, Vertex v);
bool is_twin_edge(const Graph& g, Vertex u, Vertex v);
bool is_twin_cover(const Graph& g, const std::vector<Vertex>& x);

// Partitions V \ X into twin-cliques, re-verifying the clique and uniform
// neighborhood structure instead of trusting the promise; a violation throws
// validity_error naming the offending vertices.
TwinCliqueDecomposition decompose_twin_cliques(const Graph& g, const TwinCover& x);

// Largest size of a twin-clique with neighborhood exactly s; 0 if none.
int m_of_s(const TwinCliqueDecomposition& decomposition, const std::vector<Vertex>& s);

// The graph with all twin edges removed. Its vertex-cover number equals the
// twin-cover number of g.
Graph twin_core_graph(const Graph& g);

// Endpoints of a greedy maximal matching of twin_core_graph(g), scanning
// edges in lexicographic order. Always a twin cover, at most twice optimal.
TwinCover approx_twin_cover(const Graph& g);

// Minimum twin cover via exhaustive vertex-cover search on twin_core_graph(g),
// enumerating subsets in increasing size and lexicographic order. Desk scale.
TwinCover exact_twin_cover(const Graph& g, Budget* budget = nullptr);

} // namespace svcfc
