#include <doctest.h>

#include "small_graphs.hpp"
#include "svcfc/errors.hpp"
#include "svcfc/kernel.hpp"
#include "svcfc/solver.hpp"

using namespace svcfc;
using testgraphs::complete_graph;
using testgraphs::path_graph;
using testgraphs::star_graph;

TEST_CASE("kernel bound formula") {
    CHECK(kernel_bound(0, 1) == 2);
    CHECK(kernel_bound(1, 1) == 5);
    CHECK(kernel_bound(2, 2) == 50);
    // stays exact far beyond machine words
    CHECK(kernel_bound(40, 40) > BigInt("1208925819614629174706176")); // 2^80
    CHECK_THROWS_AS(kernel_bound(-1, 1), input_error);
    CHECK_THROWS_AS(kernel_bound(0, 0), input_error);
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("counting identity behind the size bound") {
    for (int k = 1; k <= 20; ++k) {
        BigInt sum = 0;
        for (int s = 1; s <= k; ++s)
            sum += BigInt(s) * binomial(k, s);
        CHECK(sum == BigInt(k) * (BigInt(1) << (k - 1)));
    }
}

TEST_CASE("reduction rule on a star with unit budget") {
    // five leaves of type ({0},1), budget (1+1)*C(1,1) = 2: keep two leaves
    AnnotatedInstance inst{star_graph(5), 1, TwinCover{{0}}};
    KernelReport report = kernelize_annotated(inst);
    CHECK(report.n_before == 6);
    CHECK(report.realized == 3);
    CHECK(report.bound == 5);
    CHECK_FALSE(report.no_instance_shortcut);
    CHECK(report.reduced.g == star_graph(2));
    CHECK(report.reduced.k == 1);
    CHECK(report.reduced.x.vertices == std::vector<int>{0});
    REQUIRE(report.deletions.size() == 3);
    // largest minimum vertex goes first
    CHECK(report.deletions[0].vertices == std::vector<int>{5});
    CHECK(report.deletions[1].vertices == std::vector<int>{4});
    CHECK(report.deletions[2].vertices == std::vector<int>{3});
    // both sides are no-instances
    CHECK_FALSE(svcfc_decide(inst.g, inst.k).satisfiable);
    CHECK_FALSE(svcfc_decide(report.reduced.g, report.reduced.k).satisfiable);
}

TEST_CASE("oversize twin-clique forces the fixed no-instance") {
    // triangle hanging off X = {0}, k = 2
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    KernelReport report = kernelize_annotated(AnnotatedInstance{g, 2, TwinCover{{0}}});
    CHECK(report.no_instance_shortcut);
    CHECK(report.realized == 2);
    CHECK(report.reduced.g == complete_graph(2));
    CHECK(report.reduced.k == 1);
    CHECK(report.reduced.x.vertices == std::vector<int>{0, 1});
    CHECK(report.deletions.empty());
    CHECK_FALSE(svcfc_decide(report.reduced.g, 1).satisfiable);
}

TEST_CASE("instances under budget come back unchanged") {
    AnnotatedInstance inst{star_graph(2), 1, TwinCover{{0}}};
    KernelReport report = kernelize_annotated(inst);
    CHECK(report.reduced.g == inst.g);
    CHECK(report.deletions.empty());
    CHECK(report.old_to_new == std::vector<int>{0, 1, 2});
}

TEST_CASE("unannotated kernelization") {
    SUBCASE("complete graph with enough colors is untouched") {
        KernelReport report = kernelize(complete_graph(5), 5);
        CHECK_FALSE(report.no_instance_shortcut);
        CHECK(report.reduced.g == complete_graph(5));
        CHECK(report.reduced.x.vertices.empty());
    }
    SUBCASE("complete graph with one color too few collapses") {
        KernelReport report = kernelize(complete_graph(5), 4);
        CHECK(report.no_instance_shortcut);
        CHECK(report.reduced.g == complete_graph(2));
    }
    SUBCASE("greedy cover feeds the annotated rule") {
        // star with 5 leaves: the greedy matching picks {0,1}, so t = 2 and
        // each leaf type has budget 3*C(2,1) = 6 - nothing to delete
        KernelReport report = kernelize(star_graph(5), 2);
        CHECK(report.reduced.x.vertices == std::vector<int>{0, 1});
        CHECK(report.realized == 6);
        CHECK(report.deletions.empty());
    }
    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(kernelize(Graph(4, {{0, 1}, {2, 3}}), 2), validity_error);
        CHECK_THROWS_AS(kernelize(path_graph(3), 0), input_error);
    }
}

TEST_CASE("annotated validation") {
    CHECK_THROWS_AS(
        kernelize_annotated(AnnotatedInstance{path_graph(4), 2, TwinCover{{0}}}),
        validity_error);
    CHECK_THROWS_AS(
        kernelize_annotated(AnnotatedInstance{Graph(4, {{0, 1}, {2, 3}}), 2, TwinCover{{0, 2}}}),
        validity_error);
    CHECK_THROWS_AS(kernelize_annotated(AnnotatedInstance{path_graph(3), 0, TwinCover{{1}}}),
                    input_error);
}

TEST_CASE("checked per-deletion replay accepts a large star") {
    KernelizeOptions options;
    options.check_each_deletion = true;
    KernelReport report =
        kernelize_annotated(AnnotatedInstance{star_graph(9), 1, TwinCover{{0}}}, options);
    CHECK(report.realized == 3);
    CHECK(report.deletions.size() == 7);
}
