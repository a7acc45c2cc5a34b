#include "svcfc/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

namespace {

// Portable coin flip: thresholds the top 53 bits of the raw generator output
// so results do not depend on the standard library's distribution details.
bool chance(std::mt19937_64& rng, double p) {
    const double scale = 9007199254740992.0; // 2^53
    return static_cast<double>(rng() >> 11) < p * scale;
}

} // namespace

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
    if (spec.t < 0)
        throw input_error("twin cover size must be nonnegative");
    if (spec.core_edge_probability < 0.0 || spec.core_edge_probability > 1.0)
        throw input_error("core edge probability must lie in [0, 1]");

    long long clique_vertices = 0;
    int total_cliques = 0;
    for (const CliqueTypeRequest& request : spec.types) {
        if (request.size < 1)
            throw input_error("clique size must be at least 1");
        if (request.count < 1)
            throw input_error("clique count must be at least 1");
        std::vector<Vertex> s = request.s;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw input_error("type neighborhood contains a repeated vertex");
        for (Vertex v : s)
            if (v < 0 || v >= spec.t)
                throw input_error("type neighborhood vertex " + std::to_string(v) +
                                  " outside the planted cover");
        clique_vertices += static_cast<long long>(request.size) * request.count;
        total_cliques += request.count;
    }

    long long n = spec.t + clique_vertices;
    if (n == 0)
        throw input_error("generator spec produces an empty graph");

    for (const CliqueTypeRequest& request : spec.types) {
        if (request.s.empty() && (spec.t > 0 || total_cliques > 1))
            throw validity_error("a twin-clique with empty neighborhood cannot be connected "
                                 "to the rest of the graph");
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < spec.t; ++i)
        for (Vertex j = i + 1; j < spec.t; ++j)
            if (chance(rng, spec.core_edge_probability))
                edges.emplace_back(i, j);

    Vertex next = spec.t;
    for (const CliqueTypeRequest& request : spec.types) {
        for (int c = 0; c < request.count; ++c) {
            for (int i = 0; i < request.size; ++i) {
                for (int j = i + 1; j < request.size; ++j)
                    edges.emplace_back(next + i, next + j);
                for (Vertex v : request.s)
                    edges.emplace_back(v, next + i);
            }
            next += request.size;
        }
    }

    Graph g(static_cast<int>(n), edges);

    if (!is_connected(g)) {
        // Components are found in ascending order of their minimum vertex;
        // chain them together through their smallest X vertices.
        std::vector<int> component(static_cast<size_t>(n), -1);
        std::vector<Vertex> anchors;
        for (Vertex v = 0; v < n; ++v) {
            if (component[static_cast<size_t>(v)] != -1)
                continue;
            Vertex anchor = -1;
            for (Vertex w : bfs_order(g, v)) {
                component[static_cast<size_t>(w)] = static_cast<int>(anchors.size());
                if (w < spec.t && (anchor == -1 || w < anchor))
                    anchor = w;
            }
            if (anchor == -1)
                throw validity_error("a twin-clique with empty neighborhood cannot be connected "
                                     "to the rest of the graph");
            anchors.push_back(anchor);
        }
        for (size_t i = 1; i < anchors.size(); ++i)
            edges.emplace_back(std::min(anchors[i - 1], anchors[i]),
                               std::max(anchors[i - 1], anchors[i]));
        g = Graph(static_cast<int>(n), edges);
    }

    std::vector<Vertex> x(static_cast<size_t>(spec.t));
    for (Vertex i = 0; i < spec.t; ++i)
        x[static_cast<size_t>(i)] = i;
    GeneratedInstance instance{std::move(g), TwinCover{std::move(x)}};

    if (!is_connected(instance.g))
        throw std::logic_error("generator produced a disconnected graph");
    if (!is_twin_cover(instance.g, instance.x.vertices))
        throw std::logic_error("generator broke its planted twin cover");
    return instance;
}

} // namespace svcfc
