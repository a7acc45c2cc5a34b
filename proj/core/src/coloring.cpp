#include "svcfc/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

int Coloring::palette_size() const {
    std::set<int> palette(colors.begin(), colors.end());
    return static_cast<int>(palette.size());
}

std::vector<int> Coloring::color_set(const std::vector<Vertex>& vertices) const {
    std::set<int> palette;
    for (Vertex v : vertices) {
        if (v < 0 || static_cast<size_t>(v) >= colors.size())
            throw input_error("color-set query on uncolored vertex " + std::to_string(v));
        palette.insert(colors[static_cast<size_t>(v)]);
    }
    return {palette.begin(), palette.end()};
}

namespace {

void check_total(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.num_vertices())
        throw input_error("coloring is not total: " + std::to_string(c.colors.size()) +
                          " colors for " + std::to_string(g.num_vertices()) + " vertices");
    for (int color : c.colors)
        if (color < 1)
            throw input_error("colors must be positive integers");
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    check_total(g, c);
    for (auto [u, v] : g.edges())
        if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)])
            return false;
    return true;
}

namespace {

bool extend_canonical(const Graph& g, int k, Vertex v, int max_used, std::vector<int>& colors,
                      Budget* budget) {
    if (v == g.num_vertices())
        return true;
    charge(budget);
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v)) {
            if (w < v && colors[static_cast<size_t>(w)] == c) {
                clash = true;
                break;
            }
        }
        if (clash)
            continue;
        colors[static_cast<size_t>(v)] = c;
        if (extend_canonical(g, k, v + 1, std::max(max_used, c), colors, budget))
            return true;
    }
    colors[static_cast<size_t>(v)] = 0;
    return false;
}

} // namespace

ChromaticResult chromatic_number_exact(const Graph& g, Budget* budget) {
    int n = g.num_vertices();
    if (n == 0)
        return {0, Coloring{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(static_cast<size_t>(n), 0);
        if (extend_canonical(g, k, 0, 0, colors, budget))
            return {k, Coloring{std::move(colors)}};
    }
    throw std::logic_error("unreachable: n colors always suffice");
}

namespace {

// Distinct realized clique neighborhoods with their m(S), plus X itself.
struct SubsetProfile {
    std::vector<std::vector<Vertex>> sets; // sorted lexicographically
    std::vector<int> m;                    // parallel to sets
};

SubsetProfile subset_profile(const TwinCliqueDecomposition& decomposition,
                             const std::vector<Vertex>& x) {
    std::map<std::vector<Vertex>, int> best;
    for (const TwinClique& c : decomposition.cliques) {
        int& m = best[c.neighborhood_in_x];
        m = std::max(m, c.size());
    }
    best.emplace(x, 0); // m(X) stays 0 unless some clique realizes X
    SubsetProfile profile;
    for (const auto& [s, m] : best) {
        profile.sets.push_back(s);
        profile.m.push_back(m);
    }
    return profile;
}

// |phi(S)| for S given as sorted positions into x.vertices is not needed;
// phi is addressed through the position of each vertex within x.
int phi_color_count(const std::vector<Vertex>& x, const std::vector<int>& phi,
                    const std::vector<Vertex>& s) {
    std::set<int> seen;
    for (Vertex v : s) {
        auto it = std::lower_bound(x.begin(), x.end(), v);
        seen.insert(phi[static_cast<size_t>(it - x.begin())]);
    }
    return static_cast<int>(seen.size());
}

void check_phi(const Graph& g, const TwinCover& x, const std::vector<int>& phi) {
    if (phi.size() != x.vertices.size())
        throw input_error("phi must color exactly the twin cover vertices");
    for (int color : phi)
        if (color < 1)
            throw input_error("colors must be positive integers");
    for (size_t i = 0; i < x.vertices.size(); ++i)
        for (size_t j = i + 1; j < x.vertices.size(); ++j)
            if (phi[i] == phi[j] && g.has_edge(x.vertices[i], x.vertices[j]))
                throw input_error("phi is not proper on G[X]: vertices " +
                                  std::to_string(x.vertices[i]) + " and " +
                                  std::to_string(x.vertices[j]) + " share a color");
}

int max_extension_count(const std::vector<Vertex>& x, const std::vector<int>& phi,
                        const SubsetProfile& profile, std::vector<Vertex>* witness) {
    int best = 0;
    for (size_t i = 0; i < profile.sets.size(); ++i) {
        int value = phi_color_count(x, phi, profile.sets[i]) + profile.m[i];
        if (value > best) {
            best = value;
            if (witness != nullptr)
                *witness = profile.sets[i];
        }
        // profile.sets is sorted, so the first attaining subset is the
        // lexicographically smallest one
    }
    return best;
}

} // namespace

ExtensionReport extension_number(const Graph& g, const TwinCover& x, const std::vector<int>& phi,
                                 const ExtensionOptions& options) {
    check_phi(g, x, phi);
    TwinCliqueDecomposition decomposition = decompose_twin_cliques(g, x);
    SubsetProfile profile = subset_profile(decomposition, x.vertices);

    ExtensionReport report;
    report.phi = phi;
    report.k_phi = max_extension_count(x.vertices, phi, profile, &report.witness_s);

    if (options.check_full_enumeration) {
        const int t = x.size();
        if (t > 25)
            throw input_error("full subset enumeration limited to |X| <= 25");
        std::map<std::vector<Vertex>, int> m_lookup;
        for (size_t i = 0; i < profile.sets.size(); ++i)
            m_lookup[profile.sets[i]] = profile.m[i];
        int full_best = 0;
        for (unsigned long mask = 0; mask < (1ul << t); ++mask) {
            std::vector<Vertex> s;
            for (int i = 0; i < t; ++i)
                if (mask & (1ul << i))
                    s.push_back(x.vertices[static_cast<size_t>(i)]);
            auto it = m_lookup.find(s);
            int m = it == m_lookup.end() ? 0 : it->second;
            full_best = std::max(full_best, phi_color_count(x.vertices, phi, s) + m);
        }
        if (full_best != report.k_phi)
            throw std::logic_error("candidate-subset maximum disagrees with full enumeration");
    }

    // Extension: keep phi on X; each twin-clique takes the smallest available
    // colors outside phi(S). The color pool is phi's palette padded with the
    // smallest unused positive integers up to k_phi colors total, which
    // reduces to {1..k_phi} whenever phi's palette lies inside it.
    std::set<int> pool(phi.begin(), phi.end());
    for (int next = 1; static_cast<int>(pool.size()) < report.k_phi; ++next)
        pool.insert(next);

    std::vector<int> colors(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < x.vertices.size(); ++i)
        colors[static_cast<size_t>(x.vertices[i])] = phi[i];
    for (const TwinClique& clique : decomposition.cliques) {
        std::set<int> forbidden;
        for (Vertex v : clique.neighborhood_in_x)
            forbidden.insert(colors[static_cast<size_t>(v)]);
        auto it = pool.begin();
        for (Vertex v : clique.vertices) {
            while (it != pool.end() && forbidden.count(*it) != 0)
                ++it;
            if (it == pool.end())
                throw std::logic_error("extension ran out of colors below k_phi");
            colors[static_cast<size_t>(v)] = *it;
            ++it;
        }
    }
    report.extension = Coloring{std::move(colors)};
    if (!is_proper(g, report.extension) || report.extension.palette_size() > report.k_phi)
        throw std::logic_error("constructed extension violates its own guarantee");
    return report;
}

namespace {

int min_extension_over_phi(const Graph& g, const TwinCover& x, const SubsetProfile& profile,
                           std::vector<int>& phi, size_t i, int max_used) {
    if (i == x.vertices.size())
        return max_extension_count(x.vertices, phi, profile, nullptr);
    int best = -1;
    for (int c = 1; c <= max_used + 1; ++c) {
        bool clash = false;
        for (size_t j = 0; j < i; ++j) {
            if (phi[j] == c && g.has_edge(x.vertices[j], x.vertices[i])) {
                clash = true;
                break;
            }
        }
        if (clash)
            continue;
        phi[i] = c;
        int value = min_extension_over_phi(g, x, profile, phi, i + 1, std::max(max_used, c));
        if (best == -1 || value < best)
            best = value;
    }
    phi[i] = 0;
    return best;
}

} // namespace

int chi_via_twin_cover(const Graph& g, const TwinCover& x) {
    TwinCliqueDecomposition decomposition = decompose_twin_cliques(g, x);
    SubsetProfile profile = subset_profile(decomposition, x.vertices);
    // K_phi depends on phi only through its color classes, so canonical
    // colorings (at most one new color per vertex) cover every case.
    std::vector<int> phi(x.vertices.size(), 0);
    return min_extension_over_phi(g, x, profile, phi, 0, 0);
}

namespace {

std::string format_path(const Path& path) {
    std::ostringstream out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i > 0)
            out << "-";
        out << path[i];
    }
    return out.str();
}

} // namespace

Coloring svcfc_upper_coloring(const Graph& g, const TwinCover& x, const std::vector<Vertex>& y,
                              long long cap, Budget* budget) {
    for (Vertex v : y) {
        if (!x.contains(v))
            throw input_error("vertex " + std::to_string(v) + " of Y is not in X");
    }
    if (!is_connected(g))
        throw validity_error("graph is disconnected");

    std::vector<bool> in_y(static_cast<size_t>(g.num_vertices()), false);
    for (Vertex v : y)
        in_y[static_cast<size_t>(v)] = true;

    // Every shortest path of length >= 3 must meet Y; scan them all.
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            if (dist[static_cast<size_t>(v)] < 3)
                continue;
            ShortestPathEnumeration en = enumerate_shortest_paths(g, u, v, cap);
            if (en.overflowed)
                throw budget_error("shortest-path cap exceeded while checking Y coverage");
            for (const Path& path : en.paths) {
                bool hits_y = false;
                for (Vertex w : path)
                    if (in_y[static_cast<size_t>(w)]) {
                        hits_y = true;
                        break;
                    }
                if (!hits_y)
                    throw validity_error("shortest path " + format_path(path) +
                                         " of length " + std::to_string(path.size() - 1) +
                                         " avoids Y");
            }
        }
    }

    ChromaticResult chrom = chromatic_number_exact(g, budget);
    Coloring psi = chrom.witness;
    std::vector<Vertex> fresh_targets = y;
    std::sort(fresh_targets.begin(), fresh_targets.end());
    if (std::adjacent_find(fresh_targets.begin(), fresh_targets.end()) != fresh_targets.end())
        throw input_error("Y contains a repeated vertex");
    int next_fresh = chrom.chi;
    for (Vertex v : fresh_targets)
        psi.colors[static_cast<size_t>(v)] = ++next_fresh;
    return psi;
}

} // namespace svcfc
