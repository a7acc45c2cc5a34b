#pragma once

#include <optional>
#include <utility>

#include "svcfc/budget.hpp"
#include "svcfc/coloring.hpp"
#include "svcfc/graph.hpp"

namespace svcfc {

struct CfvcVerdict {
    bool is_strong = false;
    // Lexicographically first pair with no conflict-free shortest path.
    std::optional<std::pair<Vertex, Vertex>> violating_pair;
    // True when some pair's enumeration hit the cap; a negative verdict may
    // then be a false negative, a positive one never is.
    bool paths_overflowed = false;
};

// True iff some color appears on exactly one vertex of the path.
bool path_is_conflict_free(const Coloring& c, const Path& path);

// Checks every unordered vertex pair for a conflict-free shortest path.
CfvcVerdict is_strong_cfvc_coloring(const Graph& g, const Coloring& c,
                                    long long cap = kDefaultPathCap);

struct SolverOptions {
    long long cap = kDefaultPathCap;
    Budget* budget = nullptr;
};

struct DecideResult {
    bool satisfiable = false;
    std::optional<Coloring> witness; // first witness in canonical order
};

// Exhaustive search over canonical k-colorings, assigning vertices in BFS
// order from vertex 0 with at most one new color per step. Branches are
// pruned on properness (every strong CFVC coloring is proper) and on vertex
// pairs all of whose shortest paths are fully colored and conflicted.
DecideResult svcfc_decide(const Graph& g, int k, const SolverOptions& options = {});

// Smallest k for which svcfc_decide succeeds, starting from the chromatic
// number and the largest twin-clique size.
int svcfc_exact(const Graph& g, const SolverOptions& options = {});

} // namespace svcfc
