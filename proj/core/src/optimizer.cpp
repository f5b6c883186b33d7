#include "opar/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opar {

Weights::Weights(double path_length_weight, double lifetime_weight)
    : w1(path_length_weight), w2(lifetime_weight) {
    if (std::abs(w1 + w2 - 1.0) > 1e-9) {
        throw std::invalid_argument("Weights: w1 + w2 must equal 1");
    }
    if (!(w1 > 0.0 && w1 <= 1.0)) {
        throw std::invalid_argument("Weights: 0 < w1 <= 1");
    }
    if (!(w2 >= 0.0 && w2 <= 1.0)) {
        throw std::invalid_argument("Weights: 0 <= w2 <= 1");
    }
}

double objective(const RoutePath& path, const Weights& weights) {
    return weights.w1 * static_cast<double>(path.hop_count) + weights.w2 / path.min_lifetime;
}

namespace {

void check_endpoints(const NetGraph& graph, int source, int destination, const char* who) {
    if (source == destination) {
        throw std::invalid_argument(std::string(who) + ": source and destination must differ");
    }
    if (source < 0 || source >= graph.node_count ||
        destination < 0 || destination >= graph.node_count) {
        throw std::invalid_argument(std::string(who) + ": node id out of range");
    }
}

RoutePath make_path(std::vector<int> nodes, std::vector<double> edge_lifetimes) {
    RoutePath path;
    path.nodes = std::move(nodes);
    path.hop_count = static_cast<int>(path.nodes.size()) - 1;
    path.min_lifetime = *std::min_element(edge_lifetimes.begin(), edge_lifetimes.end());
    return path;
}

}  // namespace

std::optional<RoutePath> bfs_shortest_path(const NetGraph& graph, int source, int destination) {
    check_endpoints(graph, source, destination, "bfs_shortest_path");

    const int n = graph.node_count;
    std::vector<int> parent(n, -1);
    std::vector<double> parent_lifetime(n, 0.0);
    std::vector<bool> seen(n, false);
    seen[source] = true;

    // Layered BFS with each layer scanned in ascending node-id order, so a
    // vertex's parent is always the lowest-id predecessor one layer up.
    std::vector<int> layer{source};
    bool found = false;
    while (!layer.empty() && !found) {
        std::vector<int> next;
        for (int u : layer) {
            for (const NetGraph::Edge& e : graph.adjacency[u]) {
                if (seen[e.to]) {
                    continue;
                }
                seen[e.to] = true;
                parent[e.to] = u;
                parent_lifetime[e.to] = e.lifetime;
                if (e.to == destination) {
                    found = true;
                }
                next.push_back(e.to);
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    if (!found) {
        return std::nullopt;
    }

    std::vector<int> nodes;
    std::vector<double> lifetimes;
    for (int v = destination; v != source; v = parent[v]) {
        nodes.push_back(v);
        lifetimes.push_back(parent_lifetime[v]);
    }
    nodes.push_back(source);
    std::reverse(nodes.begin(), nodes.end());
    return make_path(std::move(nodes), std::move(lifetimes));
}

NetGraph prune_edges(const NetGraph& graph, const LifetimeMatrix& matrix, double threshold) {
    NetGraph pruned;
    pruned.node_count = graph.node_count;
    pruned.adjacency.resize(graph.adjacency.size());
    for (int u = 0; u < graph.node_count; ++u) {
        for (const NetGraph::Edge& e : graph.adjacency[u]) {
            if (matrix.at(u, e.to) > threshold) {
                pruned.adjacency[u].push_back(e);
                ++pruned.edge_count;
            }
        }
    }
    return pruned;
}

std::optional<RoutePath> opar_solve(const NetGraph& graph, const LifetimeMatrix& matrix,
                                    int source, int destination, const Weights& weights,
                                    SolveTrace* trace) {
    check_endpoints(graph, source, destination, "opar_solve");

    SolveTrace local;
    SolveTrace& t = trace ? *trace : local;
    t.bfs_calls = 0;
    t.thresholds.clear();

    std::optional<RoutePath> best = bfs_shortest_path(graph, source, destination);
    ++t.bfs_calls;
    if (!best) {
        return std::nullopt;
    }

    NetGraph pruned = graph;
    RoutePath current = *best;
    while (true) {
        t.thresholds.push_back(current.min_lifetime);
        pruned = prune_edges(pruned, matrix, current.min_lifetime);
        std::optional<RoutePath> candidate = bfs_shortest_path(pruned, source, destination);
        ++t.bfs_calls;
        if (!candidate) {
            break;
        }
        if (objective(*candidate, weights) < objective(*best, weights)) {
            best = *candidate;
        }
        current = std::move(*candidate);
    }
    return best;
}

namespace {

struct BruteForceSearch {
    const NetGraph& graph;
    const Weights& weights;
    int destination;

    std::vector<int> stack;
    std::vector<double> lifetimes;
    std::vector<bool> on_path;
    std::optional<RoutePath> best;

    // Strictly better objective wins; ties go to fewer hops, then to the
    // lexicographically smallest node sequence.
    bool improves(const RoutePath& candidate) const {
        if (!best) {
            return true;
        }
        const double co = objective(candidate, weights);
        const double bo = objective(*best, weights);
        if (co != bo) {
            return co < bo;
        }
        if (candidate.hop_count != best->hop_count) {
            return candidate.hop_count < best->hop_count;
        }
        return std::lexicographical_compare(candidate.nodes.begin(), candidate.nodes.end(),
                                            best->nodes.begin(), best->nodes.end());
    }

    void dfs(int u) {
        if (u == destination) {
            RoutePath candidate = make_path(stack, lifetimes);
            if (improves(candidate)) {
                best = std::move(candidate);
            }
            return;
        }
        for (const NetGraph::Edge& e : graph.adjacency[u]) {
            if (on_path[e.to]) {
                continue;
            }
            on_path[e.to] = true;
            stack.push_back(e.to);
            lifetimes.push_back(e.lifetime);
            dfs(e.to);
            lifetimes.pop_back();
            stack.pop_back();
            on_path[e.to] = false;
        }
    }
};

}  // namespace

std::optional<RoutePath> brute_force_optimal(const NetGraph& graph, const LifetimeMatrix& matrix,
                                             int source, int destination, const Weights& weights) {
    check_endpoints(graph, source, destination, "brute_force_optimal");
    (void)matrix;  // lifetimes already live on the graph edges

    BruteForceSearch search{graph, weights, destination, {}, {}, {}, std::nullopt};
    search.on_path.assign(graph.node_count, false);
    search.on_path[source] = true;
    search.stack.push_back(source);
    search.dfs(source);
    return search.best;
}

}  // namespace opar
