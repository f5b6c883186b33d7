#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opar/kinematics.hpp"

namespace opar {

/// n x n matrix of predicted link lifetimes in seconds. Diagonal entries are
/// zero; with a uniform transmission range the matrix is symmetric.
class LifetimeMatrix {
public:
    explicit LifetimeMatrix(int node_count)
        : n_(node_count), entries_(static_cast<std::size_t>(node_count) * node_count, 0.0) {}

    int size() const { return n_; }

    double at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, double lifetime) {
        entries_[static_cast<std::size_t>(i) * n_ + j] = lifetime;
    }

    friend bool operator==(const LifetimeMatrix&, const LifetimeMatrix&) = default;

private:
    int n_;
    std::vector<double> entries_;
};

/// Directed graph snapshot: one vertex per node, an edge (i, j) for every
/// strictly positive lifetime entry. Adjacency lists are sorted by target id;
/// each edge carries the lifetime it was derived from.
struct NetGraph {
    struct Edge {
        int to;
        double lifetime;
    };

    int node_count = 0;
    std::vector<std::vector<Edge>> adjacency;
    std::size_t edge_count = 0;
};

/// Fills the full matrix of pairwise link lifetimes. Every ordered pair is
/// computed (no symmetry shortcut, leaving room for per-node ranges).
/// Requires at least two states.
LifetimeMatrix build_matrix(std::span<const KinematicState> states,
                            double range, double horizon,
                            double march_step = 0.1, double tolerance = 1e-3);

/// Graph snapshot with exactly the strictly positive off-diagonal entries as
/// edges. An expired link (lifetime 0) is no link.
NetGraph to_graph(const LifetimeMatrix& matrix);

}  // namespace opar
