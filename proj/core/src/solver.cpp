#include "svcfc/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "svcfc/errors.hpp"
#include "svcfc/twins.hpp"

namespace svcfc {

bool path_is_conflict_free(const Coloring& c, const Path& path) {
    if (path.empty())
        throw input_error("empty path");
    std::vector<int> colors;
    colors.reserve(path.size());
    for (Vertex v : path) {
        if (v < 0 || static_cast<size_t>(v) >= c.colors.size())
            throw input_error("path vertex " + std::to_string(v) + " is not colored");
        colors.push_back(c.colors[static_cast<size_t>(v)]);
    }
    std::sort(colors.begin(), colors.end());
    for (size_t i = 0; i < colors.size();) {
        size_t j = i;
        while (j < colors.size() && colors[j] == colors[i])
            ++j;
        if (j - i == 1)
            return true;
        i = j;
    }
    return false;
}

CfvcVerdict is_strong_cfvc_coloring(const Graph& g, const Coloring& c, long long cap) {
    if (static_cast<int>(c.colors.size()) != g.num_vertices())
        throw input_error("coloring is not total");
    for (int color : c.colors)
        if (color < 1)
            throw input_error("colors must be positive integers");
    if (!is_connected(g))
        throw validity_error("graph is disconnected");

    CfvcVerdict verdict;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            ShortestPathEnumeration en = enumerate_shortest_paths(g, u, v, cap);
            if (en.overflowed)
                verdict.paths_overflowed = true;
            bool found = false;
            for (const Path& path : en.paths) {
                if (path_is_conflict_free(c, path)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                verdict.violating_pair = {u, v};
                return verdict;
            }
        }
    }
    verdict.is_strong = true;
    return verdict;
}

namespace {

// Pairs at distance >= 3 are the only ones a proper coloring can violate:
// on an edge, properness itself makes a color unique, and on a length-2 path
// the middle vertex's color differs from both endpoints.
struct PairConstraint {
    std::vector<Path> paths;
};

struct DecideContext {
    const Graph& g;
    int k;
    std::vector<Vertex> order;                          // BFS order from vertex 0
    std::vector<std::vector<PairConstraint>> buckets;   // by last-colored position
    std::vector<int> colors;                            // by vertex, 0 = uncolored
    std::vector<int> multiplicity;                      // scratch, size k + 1
    Budget* budget;
};

bool all_paths_conflicted(DecideContext& ctx, const PairConstraint& pair) {
    for (const Path& path : pair.paths) {
        bool conflict_free = false;
        for (Vertex v : path)
            ++ctx.multiplicity[static_cast<size_t>(ctx.colors[static_cast<size_t>(v)])];
        for (Vertex v : path) {
            if (ctx.multiplicity[static_cast<size_t>(ctx.colors[static_cast<size_t>(v)])] == 1) {
                conflict_free = true;
                break;
            }
        }
        for (Vertex v : path)
            ctx.multiplicity[static_cast<size_t>(ctx.colors[static_cast<size_t>(v)])] = 0;
        if (conflict_free)
            return false;
    }
    return true;
}

bool decide_from(DecideContext& ctx, size_t position, int max_used) {
    if (position == ctx.order.size())
        return true;
    Vertex v = ctx.order[position];
    int limit = std::min(ctx.k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        charge(ctx.budget);
        bool clash = false;
        for (Vertex w : ctx.g.neighbors(v)) {
            if (ctx.colors[static_cast<size_t>(w)] == c) {
                clash = true;
                break;
            }
        }
        if (clash)
            continue;
        ctx.colors[static_cast<size_t>(v)] = c;
        bool dead = false;
        for (const PairConstraint& pair : ctx.buckets[position]) {
            if (all_paths_conflicted(ctx, pair)) {
                dead = true;
                break;
            }
        }
        if (!dead && decide_from(ctx, position + 1, std::max(max_used, c)))
            return true;
        ctx.colors[static_cast<size_t>(v)] = 0;
    }
    return false;
}

} // namespace

DecideResult svcfc_decide(const Graph& g, int k, const SolverOptions& options) {
    if (k < 1)
        throw input_error("target color count k must be at least 1");
    if (!is_connected(g))
        throw validity_error("graph is disconnected");
    int n = g.num_vertices();
    if (n == 0)
        return {true, Coloring{}};

    DecideContext ctx{g, k, bfs_order(g, 0), {}, {}, {}, options.budget};
    std::vector<int> position_of(static_cast<size_t>(n));
    for (size_t i = 0; i < ctx.order.size(); ++i)
        position_of[static_cast<size_t>(ctx.order[i])] = static_cast<int>(i);

    // Each constraint is checked once per branch, at the first position where
    // every vertex of every one of its shortest paths has a color.
    ctx.buckets.resize(static_cast<size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (dist[static_cast<size_t>(v)] < 3)
                continue;
            ShortestPathEnumeration en = enumerate_shortest_paths(g, u, v, options.cap);
            if (en.overflowed)
                throw budget_error("shortest-path cap exceeded while collecting constraints");
            int last = 0;
            for (const Path& path : en.paths)
                for (Vertex w : path)
                    last = std::max(last, position_of[static_cast<size_t>(w)]);
            ctx.buckets[static_cast<size_t>(last)].push_back(PairConstraint{std::move(en.paths)});
        }
    }

    ctx.colors.assign(static_cast<size_t>(n), 0);
    ctx.multiplicity.assign(static_cast<size_t>(k) + 1, 0);
    if (decide_from(ctx, 0, 0))
        return {true, Coloring{std::move(ctx.colors)}};
    return {false, std::nullopt};
}

int svcfc_exact(const Graph& g, const SolverOptions& options) {
    if (!is_connected(g))
        throw validity_error("graph is disconnected");
    int n = g.num_vertices();
    if (n == 0)
        return 0;

    int lower = chromatic_number_exact(g, options.budget).chi;
    TwinCliqueDecomposition decomposition = decompose_twin_cliques(g, approx_twin_cover(g));
    for (const TwinClique& clique : decomposition.cliques)
        lower = std::max(lower, clique.size());

    for (int k = lower; k <= n; ++k)
        if (svcfc_decide(g, k, options).satisfiable)
            return k;
    throw std::logic_error("unreachable: n distinct colors are a strong CFVC coloring");
}

} // namespace svcfc
