#pragma once

#include <cstdint>
#include <vector>

#include "svcfc/graph.hpp"
#include "svcfc/twins.hpp"

namespace svcfc {

struct CliqueTypeRequest {
    std::vector<Vertex> s; // neighborhood inside X, vertices in [0, t)
    int size = 1;          // clique size
    int count = 1;         // number of cliques of this type
};

struct GeneratorSpec {
    int t = 0; // planted twin cover {0, ..., t-1}
    std::vector<CliqueTypeRequest> types;
    std::uint64_t seed = 0;
    double core_edge_probability = 0.5; // edges inside X
};

struct GeneratedInstance {
    Graph g;
    TwinCover x;
};

// Builds a connected graph with planted twin cover X = {0..t-1} and exactly
// the requested twin-cliques per type. Deterministic under the seed; extra
// X-X edges are added when needed to connect the result. Cliques with S = {}
// cannot be connected to anything else and raise validity_error unless they
// are the entire graph.
GeneratedInstance generate_instance(const GeneratorSpec& spec);

} // namespace svcfc
