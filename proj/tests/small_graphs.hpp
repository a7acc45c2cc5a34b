#pragma once

// Small-graph corpus helpers shared by the property and acceptance suites:
// named constructions, an exhaustive catalog of connected graphs up to
// isomorphism, and seeded random samplers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "svcfc/graph.hpp"

namespace testgraphs {

inline svcfc::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return svcfc::Graph(n, edges);
}

inline svcfc::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return svcfc::Graph(n, edges);
}

inline svcfc::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return svcfc::Graph(n, edges);
}

// Star with the center at vertex 0.
inline svcfc::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return svcfc::Graph(leaves + 1, edges);
}

inline svcfc::Graph complete_minus_edge(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1))
                edges.emplace_back(i, j);
    return svcfc::Graph(n, edges);
}

// Adjacency as per-vertex neighbor bitmasks; only valid for n <= 32.
inline std::vector<std::uint32_t> adjacency_masks(const svcfc::Graph& g) {
    std::vector<std::uint32_t> mask(static_cast<size_t>(g.num_vertices()), 0);
    for (auto [u, v] : g.edges()) {
        mask[static_cast<size_t>(u)] |= 1u << v;
        mask[static_cast<size_t>(v)] |= 1u << u;
    }
    return mask;
}

inline std::uint64_t edge_code(const std::vector<std::uint32_t>& adj,
                               const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (adj[static_cast<size_t>(perm[static_cast<size_t>(i)])] >>
                    perm[static_cast<size_t>(j)] &
                1u)
                code |= 1ull << bit;
    return code;
}

// Minimum edge code over all vertex permutations; equal codes mean isomorphic
// graphs. Only sensible for n <= 9 or so.
inline std::uint64_t canonical_code(const svcfc::Graph& g) {
    std::vector<std::uint32_t> adj = adjacency_masks(g);
    std::vector<int> perm(static_cast<size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        best = std::min(best, edge_code(adj, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All connected graphs on exactly n vertices, one per isomorphism class.
// Built by extending the (n-1)-vertex catalog with one new vertex over every
// nonempty neighborhood; every connected graph has a non-cut vertex, so this
// reaches every class.
inline const std::vector<svcfc::Graph>& connected_catalog(int n) {
    static std::vector<std::vector<svcfc::Graph>> cache; // cache[n]
    if (n < 1 || n > 8)
        throw std::logic_error("catalog supports 1 <= n <= 8");
    if (static_cast<int>(cache.size()) > n && !cache[static_cast<size_t>(n)].empty())
        return cache[static_cast<size_t>(n)];
    if (cache.size() < 9)
        cache.resize(9);
    if (n == 1) {
        cache[1] = {svcfc::Graph(1)};
        return cache[1];
    }
    const std::vector<svcfc::Graph>& smaller = connected_catalog(n - 1);
    std::set<std::uint64_t> seen;
    std::vector<svcfc::Graph> result;
    for (const svcfc::Graph& base : smaller) {
        for (std::uint32_t nbrs = 1; nbrs < (1u << (n - 1)); ++nbrs) {
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : base.edges())
                edges.emplace_back(u, v);
            for (int v = 0; v < n - 1; ++v)
                if (nbrs >> v & 1u)
                    edges.emplace_back(v, n - 1);
            svcfc::Graph candidate(n, edges);
            if (seen.insert(canonical_code(candidate)).second)
                result.push_back(std::move(candidate));
        }
    }
    cache[static_cast<size_t>(n)] = std::move(result);
    return cache[static_cast<size_t>(n)];
}

inline std::vector<svcfc::Graph> connected_catalog_up_to(int nmax) {
    std::vector<svcfc::Graph> all;
    for (int n = 1; n <= nmax; ++n) {
        const auto& level = connected_catalog(n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

// Distinct (as labeled graphs) connected samples from G(n, p) with varying p.
inline std::vector<svcfc::Graph> sample_connected_graphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<svcfc::Graph> result;
    const double probabilities[] = {0.25, 0.35, 0.5, 0.65, 0.8};
    int spins = 0;
    while (static_cast<int>(result.size()) < count) {
        if (++spins > count * 1000)
            throw std::logic_error("sampler failed to reach the requested count");
        double p = probabilities[static_cast<size_t>(result.size()) % 5];
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (static_cast<double>(rng() >> 11) < p * 9007199254740992.0)
                    edges.emplace_back(i, j);
        svcfc::Graph g(n, edges);
        if (!svcfc::is_connected(g))
            continue;
        if (seen.insert(g.edges()).second)
            result.push_back(std::move(g));
    }
    return result;
}

} // namespace testgraphs
