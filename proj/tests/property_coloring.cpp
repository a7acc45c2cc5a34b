#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "small_graphs.hpp"
#include "svcfc/coloring.hpp"
#include "svcfc/solver.hpp"
#include "svcfc/twins.hpp"

using namespace svcfc;

TEST_CASE("twin-cover chi equals backtracking chi under every valid cover") {
    for (const Graph& g : testgraphs::connected_catalog_up_to(6)) {
        int chi = chromatic_number_exact(g).chi;
        int n = g.num_vertices();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Vertex> x;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u)
                    x.push_back(v);
            if (is_twin_cover(g, x))
                CHECK(chi_via_twin_cover(g, TwinCover{x}) == chi);
        }
    }
}

TEST_CASE("svcfc sits between chi and chi plus the cover size") {
    for (const Graph& g : testgraphs::connected_catalog_up_to(6)) {
        int chi = chromatic_number_exact(g).chi;
        int value = svcfc_exact(g);
        int t = exact_twin_cover(g).size();
        CHECK(chi <= value);
        CHECK(value <= chi + t);
    }
}

TEST_CASE("the fresh-color construction is a strong CFVC coloring") {
    for (const Graph& g : testgraphs::connected_catalog_up_to(6)) {
        TwinCover x = exact_twin_cover(g);
        Coloring psi = svcfc_upper_coloring(g, x, x.vertices);
        CHECK(is_proper(g, psi));
        CHECK(is_strong_cfvc_coloring(g, psi).is_strong);
        CHECK(psi.palette_size() <= chromatic_number_exact(g).chi + x.size());
    }
}

TEST_CASE("every brute-forced proper extension needs at least k_phi colors") {
    std::mt19937_64 rng(31337);
    for (const Graph& g : testgraphs::connected_catalog_up_to(5)) {
        // minimal covers and the full vertex set both make valid anchors
        std::vector<TwinCover> covers{exact_twin_cover(g)};
        std::vector<Vertex> all(static_cast<size_t>(g.num_vertices()));
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            all[static_cast<size_t>(v)] = v;
        covers.push_back(TwinCover{all});
        for (const TwinCover& x : covers) {
            std::vector<int> phi = oracles::random_proper_phi(g, x, rng);
            ExtensionReport report = extension_number(g, x, phi);
            CHECK(oracles::min_extension_brute(g, x, phi) == report.k_phi);
            CHECK(report.extension.palette_size() == report.k_phi);
        }
    }
}
