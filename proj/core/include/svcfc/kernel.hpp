#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "svcfc/budget.hpp"
#include "svcfc/graph.hpp"
#include "svcfc/twins.hpp"

namespace svcfc {

using BigInt = boost::multiprecision::cpp_int;

// Instance of the annotated problem: decide svcfc(g) <= k given a twin
// cover x. Parameter kappa = k + |x|.
struct AnnotatedInstance {
    Graph g;
    int k = 1;
    TwinCover x;

    int kappa() const { return k + x.size(); }
};

// Throws validity_error if g is disconnected or x is not a twin cover,
// input_error if k < 1.
void validate_instance(const AnnotatedInstance& instance);

// Exact binomial coefficient; 0 outside the triangle.
BigInt binomial(int n, int r);

// Vertex bound of the reduced instance: max{2, t + (t+1) k 2^(t+k-1)}.
BigInt kernel_bound(int t, int k);

struct CliqueDeletion {
    std::vector<Vertex> s;        // type neighborhood, original labels
    int size = 0;                 // type size
    std::vector<Vertex> vertices; // deleted clique, original labels
};

struct KernelizeOptions {
    // Apply deletions one clique at a time and re-verify connectivity,
    // twin-cover validity, and distance preservation after each step.
    bool check_each_deletion = false;
};

struct KernelReport {
    AnnotatedInstance reduced;
    std::vector<CliqueDeletion> deletions; // in deletion order
    BigInt bound;
    int n_before = 0;
    int realized = 0;                 // |V(reduced.g)|, always <= bound
    bool no_instance_shortcut = false; // reduced is the fixed no-instance (K_2, 1, {0, 1})
    std::vector<int> old_to_new;      // original label -> reduced label, -1 if deleted
};

// Reduction rule, applied exhaustively per type (S, s): keep at most
// (t+1) * binomial(k, s) twin-cliques of each type, preferring those with the
// smallest minimum vertex; a twin-clique larger than k forces the fixed
// no-instance instead.
KernelReport kernelize_annotated(const AnnotatedInstance& instance,
                                 const KernelizeOptions& options = {});

// Unannotated kernelization: computes a twin cover (greedy 2-approximation,
// or the exact minimum when use_exact_tc is set) and reduces the annotated
// instance built from it.
KernelReport kernelize(const Graph& g, int k, bool use_exact_tc = false,
                       Budget* budget = nullptr, const KernelizeOptions& options = {});

} // namespace svcfc
