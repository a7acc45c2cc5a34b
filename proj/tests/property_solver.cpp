#include <doctest.h>

#include "oracles.hpp"
#include "small_graphs.hpp"
#include "svcfc/solver.hpp"

using namespace svcfc;

TEST_CASE("pruning never changes svcfc on the full six-vertex catalog") {
    // the odometer oracle sweeps every coloring, improper ones included
    for (const Graph& g : testgraphs::connected_catalog(6))
        CHECK(svcfc_exact(g) == oracles::svcfc_brute(g));
}
