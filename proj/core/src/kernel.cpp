#include "svcfc/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

void validate_instance(const AnnotatedInstance& instance) {
    if (instance.k < 1)
        throw input_error("target color count k must be at least 1");
    if (!is_connected(instance.g))
        throw validity_error("instance graph is disconnected");
    for (Vertex v : instance.x.vertices)
        instance.g.check_vertex(v);
    for (auto [u, v] : instance.g.edges()) {
        if (instance.x.contains(u) || instance.x.contains(v))
            continue;
        if (!are_true_twins(instance.g, u, v))
            throw validity_error("annotation is not a twin cover: edge (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ") outside X is not a twin edge");
    }
}

BigInt binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (int i = 0; i < r; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

BigInt kernel_bound(int t, int k) {
    if (t < 0)
        throw input_error("twin cover size must be nonnegative");
    if (k < 1)
        throw input_error("target color count k must be at least 1");
    BigInt value = BigInt(t) + BigInt(t + 1) * k * (BigInt(1) << (t + k - 1));
    return std::max(BigInt(2), value);
}

namespace {

AnnotatedInstance fixed_no_instance() {
    return AnnotatedInstance{Graph(2, {{0, 1}}), 1, TwinCover{{0, 1}}};
}

// Debug-mode replay: apply the planned deletions one clique at a time and
// check connectivity, twin-cover validity, and that distances among the
// surviving vertices never change.
void replay_deletions_checked(const Graph& original, const TwinCover& x,
                              const std::vector<CliqueDeletion>& deletions) {
    Graph current = original;
    std::vector<Vertex> current_of_original(static_cast<size_t>(original.num_vertices()));
    for (Vertex v = 0; v < original.num_vertices(); ++v)
        current_of_original[static_cast<size_t>(v)] = v;

    for (const CliqueDeletion& deletion : deletions) {
        std::vector<Vertex> doomed;
        for (Vertex v : deletion.vertices)
            doomed.push_back(current_of_original[static_cast<size_t>(v)]);
        VertexDeletion step = delete_vertices(current, doomed);

        if (!is_connected(step.graph))
            throw std::logic_error("kernelization step disconnected the graph");

        std::vector<Vertex> x_now;
        for (Vertex v : x.vertices)
            x_now.push_back(
                step.old_to_new[static_cast<size_t>(current_of_original[static_cast<size_t>(v)])]);
        if (!is_twin_cover(step.graph, x_now))
            throw std::logic_error("kernelization step broke the twin cover");

        for (Vertex u = 0; u < step.graph.num_vertices(); ++u) {
            std::vector<int> before = bfs_distances(current, step.new_to_old[static_cast<size_t>(u)]);
            std::vector<int> after = bfs_distances(step.graph, u);
            for (Vertex w = 0; w < step.graph.num_vertices(); ++w) {
                if (after[static_cast<size_t>(w)] !=
                    before[static_cast<size_t>(step.new_to_old[static_cast<size_t>(w)])])
                    throw std::logic_error("kernelization step changed a surviving distance");
            }
        }

        for (Vertex v = 0; v < original.num_vertices(); ++v) {
            Vertex c = current_of_original[static_cast<size_t>(v)];
            current_of_original[static_cast<size_t>(v)] =
                c == -1 ? -1 : step.old_to_new[static_cast<size_t>(c)];
        }
        current = step.graph;
    }
}

} // namespace

KernelReport kernelize_annotated(const AnnotatedInstance& instance,
                                 const KernelizeOptions& options) {
    validate_instance(instance);
    TwinCliqueDecomposition decomposition = decompose_twin_cliques(instance.g, instance.x);

    const int t = instance.x.size();
    const int k = instance.k;

    KernelReport report;
    report.bound = kernel_bound(t, k);
    report.n_before = instance.g.num_vertices();

    // A twin-clique needs pairwise distinct colors, so one of size > k makes
    // the instance unsatisfiable outright.
    for (const TwinClique& clique : decomposition.cliques) {
        if (clique.size() > k) {
            report.reduced = fixed_no_instance();
            report.no_instance_shortcut = true;
            report.realized = 2;
            report.old_to_new.assign(static_cast<size_t>(report.n_before), -1);
            return report;
        }
    }

    // Per type (S, s): keep the (t+1)*C(k,s) cliques with the smallest
    // minimum vertex, delete the rest starting from the largest minimum
    // vertex. Types are processed in sorted order.
    for (const auto& [type, indices] : decomposition.by_type) {
        const auto& [s_set, s] = type;
        BigInt budget = BigInt(t + 1) * binomial(k, s);
        BigInt count = static_cast<int>(indices.size());
        if (count <= budget)
            continue;
        // indices are ascending, and cliques are sorted by minimum vertex
        std::size_t keep = static_cast<std::size_t>(budget);
        for (std::size_t i = indices.size(); i-- > keep;) {
            const TwinClique& doomed = decomposition.cliques[static_cast<size_t>(indices[i])];
            report.deletions.push_back(CliqueDeletion{s_set, s, doomed.vertices});
        }
    }

    if (options.check_each_deletion)
        replay_deletions_checked(instance.g, instance.x, report.deletions);

    std::vector<Vertex> doomed;
    for (const CliqueDeletion& deletion : report.deletions)
        doomed.insert(doomed.end(), deletion.vertices.begin(), deletion.vertices.end());
    VertexDeletion applied = delete_vertices(instance.g, doomed);

    std::vector<Vertex> x_reduced;
    for (Vertex v : instance.x.vertices)
        x_reduced.push_back(applied.old_to_new[static_cast<size_t>(v)]);

    report.reduced = AnnotatedInstance{applied.graph, k, TwinCover{std::move(x_reduced)}};
    report.realized = applied.graph.num_vertices();
    report.old_to_new = std::move(applied.old_to_new);

    validate_instance(report.reduced);
    if (BigInt(report.realized) > report.bound)
        throw std::logic_error("kernel exceeded its theoretical size bound");
    return report;
}

KernelReport kernelize(const Graph& g, int k, bool use_exact_tc, Budget* budget,
                       const KernelizeOptions& options) {
    if (k < 1)
        throw input_error("target color count k must be at least 1");
    if (!is_connected(g))
        throw validity_error("graph is disconnected");
    TwinCover cover = use_exact_tc ? exact_twin_cover(g, budget) : approx_twin_cover(g);
    return kernelize_annotated(AnnotatedInstance{g, k, std::move(cover)}, options);
}

} // namespace svcfc
