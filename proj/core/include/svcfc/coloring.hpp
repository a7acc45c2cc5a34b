#pragma once

#include <vector>

#include "svcfc/budget.hpp"
#include "svcfc/graph.hpp"
#include "svcfc/twins.hpp"

namespace svcfc {

// Default cap on per-pair shortest-path enumeration; overflow is always
// reported, never silently ignored.
inline constexpr long long kDefaultPathCap = 100000;

// Total vertex coloring with positive integer colors, indexed by vertex.
struct Coloring {
    std::vector<int> colors;

    int palette_size() const;
    // Distinct colors appearing on the given vertices, sorted.
    std::vector<int> color_set(const std::vector<Vertex>& vertices) const;

    bool operator==(const Coloring& other) const = default;
};

bool is_proper(const Graph& g, const Coloring& c);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

// Exact chromatic number by canonical backtracking (vertex 0 gets color 1,
// each vertex may use at most one color beyond the maximum used so far).
ChromaticResult chromatic_number_exact(const Graph& g, Budget* budget = nullptr);

struct ExtensionReport {
    std::vector<int> phi;          // input coloring of G[X], parallel to x.vertices
    int k_phi = 0;                 // minimum palette size of any proper extension
    std::vector<Vertex> witness_s; // subset of X attaining the maximum
    Coloring extension;            // proper coloring of g extending phi with k_phi colors
};

struct ExtensionOptions {
    // Cross-check the maximum against full enumeration of all 2^|X| subsets.
    bool check_full_enumeration = false;
};

// Minimum number of colors needed by a proper coloring of g extending phi:
// the maximum of |phi(S)| + m(S) over S. Since subsets with m(S) = 0 are
// dominated by S = X, only realized clique neighborhoods plus X itself are
// evaluated.
ExtensionReport extension_number(const Graph& g, const TwinCover& x,
                                 const std::vector<int>& phi,
                                 const ExtensionOptions& options = {});

// Exact chromatic number as the minimum extension count over all canonical
// proper colorings of G[X]. Exponential in |x|.
int chi_via_twin_cover(const Graph& g, const TwinCover& x);

// Strong CFVC coloring with at most chi(g) + |y| colors: a minimum proper
// coloring, overridden on y by pairwise distinct fresh colors. Requires every
// shortest path of length >= 3 to contain a vertex of y (always true for
// y = X when x is a twin cover); the requirement is verified by exhaustive
// shortest-path scan.
Coloring svcfc_upper_coloring(const Graph& g, const TwinCover& x, const std::vector<Vertex>& y,
                              long long cap = kDefaultPathCap, Budget* budget = nullptr);

} // namespace svcfc
