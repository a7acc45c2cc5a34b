#include "svcfc/twins.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

bool TwinCover::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

TwinCover make_twin_cover(const Graph& g, std::vector<Vertex> vertices) {
    for (Vertex v : vertices)
        g.check_vertex(v);
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw input_error("twin cover contains a repeated vertex");
    return TwinCover{std::move(vertices)};
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw input_error("true-twin test requires distinct vertices");
    if (!g.has_edge(u, v))
        return false; // closed neighborhoods can only agree if u, v are adjacent
    // N[u] = N[v]  <=>  N(u) \ {v} = N(v) \ {u}
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    if (nu.size() != nv.size())
        return false;
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        Vertex a = nu[i], b = nv[j];
        if (a == v) {
            ++i;
            continue;
        }
        if (b == u) {
            ++j;
            continue;
        }
        if (a != b)
            return false;
        ++i;
        ++j;
    }
    while (i < nu.size() && nu[i] == v)
        ++i;
    while (j < nv.size() && nv[j] == u)
        ++j;
    return i == nu.size() && j == nv.size();
}

bool is_twin_edge(const Graph& g, Vertex u, Vertex v) {
    return g.has_edge(u, v) && are_true_twins(g, u, v);
}

bool is_twin_cover(const Graph& g, const std::vector<Vertex>& x) {
    std::vector<bool> in_x(static_cast<size_t>(g.num_vertices()), false);
    for (Vertex v : x) {
        g.check_vertex(v);
        in_x[static_cast<size_t>(v)] = true;
    }
    for (auto [u, v] : g.edges()) {
        if (in_x[static_cast<size_t>(u)] || in_x[static_cast<size_t>(v)])
            continue;
        if (!are_true_twins(g, u, v))
            return false;
    }
    return true;
}

TwinCliqueDecomposition decompose_twin_cliques(const Graph& g, const TwinCover& x) {
    std::vector<bool> in_x(static_cast<size_t>(g.num_vertices()), false);
    for (Vertex v : x.vertices) {
        g.check_vertex(v);
        in_x[static_cast<size_t>(v)] = true;
    }

    // Components of G-X, discovered in ascending order of their minimum vertex.
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
    TwinCliqueDecomposition decomposition;
    for (Vertex start = 0; start < g.num_vertices(); ++start) {
        if (in_x[static_cast<size_t>(start)] || seen[static_cast<size_t>(start)])
            continue;
        std::vector<Vertex> component{start};
        seen[static_cast<size_t>(start)] = true;
        for (size_t head = 0; head < component.size(); ++head) {
            for (Vertex w : g.neighbors(component[head])) {
                if (!in_x[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    component.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());

        // The twin-cover promise makes every component a clique with one
        // shared neighborhood in X; re-verify both rather than trusting it.
        std::vector<Vertex> s;
        for (Vertex w : g.neighbors(component[0]))
            if (in_x[static_cast<size_t>(w)])
                s.push_back(w);
        for (size_t i = 0; i < component.size(); ++i) {
            for (size_t j = i + 1; j < component.size(); ++j) {
                if (!g.has_edge(component[i], component[j]))
                    throw validity_error(
                        "not a twin cover: component vertices " + std::to_string(component[i]) +
                        " and " + std::to_string(component[j]) + " are not adjacent");
            }
            std::vector<Vertex> si;
            for (Vertex w : g.neighbors(component[i]))
                if (in_x[static_cast<size_t>(w)])
                    si.push_back(w);
            if (si != s)
                throw validity_error("not a twin cover: vertices " + std::to_string(component[0]) +
                                     " and " + std::to_string(component[i]) +
                                     " have different neighborhoods in X");
        }
        decomposition.cliques.push_back(TwinClique{std::move(component), std::move(s)});
    }

    for (int i = 0; i < static_cast<int>(decomposition.cliques.size()); ++i) {
        const TwinClique& c = decomposition.cliques[static_cast<size_t>(i)];
        decomposition.by_type[{c.neighborhood_in_x, c.size()}].push_back(i);
    }
    return decomposition;
}

int m_of_s(const TwinCliqueDecomposition& decomposition, const std::vector<Vertex>& s) {
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    int best = 0;
    for (const TwinClique& c : decomposition.cliques)
        if (c.neighborhood_in_x == sorted)
            best = std::max(best, c.size());
    return best;
}

Graph twin_core_graph(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [u, v] : g.edges())
        if (!are_true_twins(g, u, v))
            kept.emplace_back(u, v);
    return Graph(g.num_vertices(), kept);
}

TwinCover approx_twin_cover(const Graph& g) {
    Graph core = twin_core_graph(g);
    std::vector<bool> matched(static_cast<size_t>(g.num_vertices()), false);
    std::vector<Vertex> y;
    for (auto [u, v] : core.edges()) {
        if (matched[static_cast<size_t>(u)] || matched[static_cast<size_t>(v)])
            continue;
        matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(v)] = true;
        y.push_back(u);
        y.push_back(v);
    }
    std::sort(y.begin(), y.end());
    TwinCover cover{std::move(y)};
    if (!is_twin_cover(g, cover.vertices))
        throw std::logic_error("matching endpoints failed to form a twin cover");
    return cover;
}

namespace {

bool covers_all_edges(const Graph& g, const std::vector<Vertex>& subset) {
    for (auto [u, v] : g.edges()) {
        if (!std::binary_search(subset.begin(), subset.end(), u) &&
            !std::binary_search(subset.begin(), subset.end(), v))
            return false;
    }
    return true;
}

// Advances `subset` to the next r-combination of {0..n-1} in lexicographic
// order; false when exhausted.
bool next_combination(std::vector<Vertex>& subset, int n) {
    int r = static_cast<int>(subset.size());
    for (int i = r - 1; i >= 0; --i) {
        if (subset[static_cast<size_t>(i)] < n - r + i) {
            ++subset[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

TwinCover exact_twin_cover(const Graph& g, Budget* budget) {
    Graph core = twin_core_graph(g);
    int n = g.num_vertices();
    for (int r = 0; r <= n; ++r) {
        std::vector<Vertex> subset(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            subset[static_cast<size_t>(i)] = i;
        while (true) {
            charge(budget);
            if (covers_all_edges(core, subset)) {
                TwinCover cover{subset};
                if (!is_twin_cover(g, cover.vertices))
                    throw std::logic_error("vertex cover of the twin-edge-free core is not "
                                           "a twin cover");
                return cover;
            }
            if (r == 0 || !next_combination(subset, n))
                break;
        }
    }
    throw std::logic_error("unreachable: the full vertex set covers all edges");
}

} // namespace svcfc
