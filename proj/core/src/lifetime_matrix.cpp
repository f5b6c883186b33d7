#include "opar/lifetime_matrix.hpp"

#include <stdexcept>

namespace opar {

LifetimeMatrix build_matrix(std::span<const KinematicState> states,
                            double range, double horizon,
                            double march_step, double tolerance) {
    const int n = static_cast<int>(states.size());
    if (n < 2) {
        throw std::invalid_argument("build_matrix: need at least two node states");
    }
    LifetimeMatrix matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            matrix.set(i, j, link_lifetime(states[i], states[j], range, horizon,
                                           march_step, tolerance));
        }
    }
    return matrix;
}

NetGraph to_graph(const LifetimeMatrix& matrix) {
    NetGraph graph;
    graph.node_count = matrix.size();
    graph.adjacency.resize(matrix.size());
    for (int i = 0; i < matrix.size(); ++i) {
        for (int j = 0; j < matrix.size(); ++j) {
            const double lifetime = matrix.at(i, j);
            if (i != j && lifetime > 0.0) {
                graph.adjacency[i].push_back({j, lifetime});
                ++graph.edge_count;
            }
        }
    }
    return graph;
}

}  // namespace opar
