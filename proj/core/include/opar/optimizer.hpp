#pragma once

#include <optional>
#include <vector>

#include "opar/lifetime_matrix.hpp"

namespace opar {

/// Trade-off weights between path length (w1) and inverse path lifetime (w2).
/// Requires w1 + w2 = 1, 0 < w1 <= 1, 0 <= w2 < 1.
struct Weights {
    Weights(double path_length_weight, double lifetime_weight);

    double w1;
    double w2;

    friend bool operator==(const Weights&, const Weights&) = default;
};

/// A simple directed path from source to destination with its hop count and
/// bottleneck (minimum) link lifetime.
struct RoutePath {
    std::vector<int> nodes;
    int hop_count = 0;
    double min_lifetime = 0.0;

    friend bool operator==(const RoutePath&, const RoutePath&) = default;
};

/// Scalarized route cost: w1 * hops + w2 / bottleneck lifetime. The inverse
/// lifetime term is tight at the path's weakest link.
double objective(const RoutePath& path, const Weights& weights);

/// Minimum-hop path from `source` to `destination`, or nullopt if the
/// destination is unreachable. Ties between equal-hop paths are broken by
/// preferring the lowest-id predecessor on every layer, so the result is
/// deterministic. Requires source != destination.
std::optional<RoutePath> bfs_shortest_path(const NetGraph& graph, int source, int destination);

/// Copy of `graph` keeping only edges with lifetime strictly greater than
/// `threshold` (lifetimes looked up in `matrix`).
NetGraph prune_edges(const NetGraph& graph, const LifetimeMatrix& matrix, double threshold);

/// Per-solve diagnostics: number of BFS invocations and the pruning
/// threshold sequence (strictly increasing by construction).
struct SolveTrace {
    int bfs_calls = 0;
    std::vector<double> thresholds;
};

/// Route minimizing the scalarized objective over all simple paths.
///
/// Iterative pruning search: start from the minimum-hop path, then repeatedly
/// remove every edge whose lifetime is <= the current path's bottleneck and
/// re-run BFS on what remains, keeping the best objective seen. Each round
/// deletes at least the current bottleneck edge, so the thresholds increase
/// strictly and BFS runs at most |E| + 1 times. Pruning happens every round
/// whether or not the objective improved; the best path is tracked
/// separately, and on objective ties the earlier (shorter, shorter-lived)
/// path is kept.
std::optional<RoutePath> opar_solve(const NetGraph& graph, const LifetimeMatrix& matrix,
                                    int source, int destination, const Weights& weights,
                                    SolveTrace* trace = nullptr);

/// Exhaustive oracle: enumerates every simple source->destination path by
/// depth-first search and returns the objective minimizer. Ties broken by
/// fewer hops, then lexicographically smallest node sequence. Exponential;
/// intended for graphs of a dozen nodes or fewer.
std::optional<RoutePath> brute_force_optimal(const NetGraph& graph, const LifetimeMatrix& matrix,
                                             int source, int destination, const Weights& weights);

}  // namespace opar
