#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svcfc/graph.hpp"

namespace svcfc {

// Edge-list instance file:
//   n m
//   u v            (m lines, 0-indexed)
//   X: v1 v2 ...   (optional twin-cover annotation)
//   k: <int>       (optional color target)
struct ParsedInstance {
    Graph g;
    std::optional<std::vector<Vertex>> x;
    std::optional<int> k;
};

// Parses the edge-list format; malformed lines raise input_error with the
// line number. Disconnected graphs parse fine and are rejected downstream.
ParsedInstance parse_instance(const std::string& text);

std::string serialize_instance(const Graph& g, const std::optional<std::vector<Vertex>>& x,
                               std::optional<int> k);

// graph6, the nauty interchange format. One graph per line.
Graph parse_graph6(const std::string& line);
std::vector<Graph> parse_graph6_file(const std::string& text);
std::string to_graph6(const Graph& g);

} // namespace svcfc
