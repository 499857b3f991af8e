#pragma once

#include <cstddef>
#include <vector>

#include "tda/diagram.hpp"

namespace tda {

// How infinite-death (essential) points enter the matching distance. Never
// applied silently: `drop` removes them, `truncate` replaces the death with
// a finite cap and fails if the cap sits below any finite coordinate.
struct InfinitePolicy {
    enum class Mode { drop, truncate };

    Mode mode = Mode::drop;
    double cap = 0.0;

    static InfinitePolicy drop() { return {Mode::drop, 0.0}; }
    static InfinitePolicy truncate(double cap);
};

// Augmented (n+m) x (n+m) squared-cost assignment problem: rows are the n
// points of X followed by m diagonal copies, columns the m points of Y
// followed by n diagonal copies.
struct CostMatrix {
    std::size_t size = 0;
    std::vector<double> entries; // row-major

    double at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
};

struct Matching {
    std::vector<std::size_t> assignment; // row -> column, a permutation
    double total_cost = 0.0;
};

// Symmetric table of pairwise diagram distances with a zero diagonal.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> entries; // row-major

    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

// Resolves the policy on one diagram; the result has only finite deaths.
// Throws when truncation would place the cap below a finite coordinate.
PersistenceDiagram apply_infinite_policy(const PersistenceDiagram& diagram,
                                         const InfinitePolicy& policy);

// Requires both diagrams to be finite-death (policy already applied).
// Point-to-point entries are squared Euclidean distances, point-to-diagonal
// entries the squared perpendicular distance (death-birth)^2/2, and
// diagonal-to-diagonal entries are 0.
CostMatrix build_cost_matrix(const PersistenceDiagram& x, const PersistenceDiagram& y);

// Exact minimum-cost assignment in O(size^3) via shortest augmenting paths
// with dual potentials (Jonker-Volgenant flavour of the Hungarian method).
// The matrix must be square with finite nonnegative entries.
Matching hungarian_assign(const CostMatrix& cost);

// L2-matching (2-Wasserstein) distance: the square root of the minimal total
// squared displacement over augmented bijections. Zero exactly when the
// policy-processed diagrams are multiset-equal. Throws on mismatched
// homology dimensions.
double diagram_distance(const PersistenceDiagram& x, const PersistenceDiagram& y,
                        const InfinitePolicy& policy = InfinitePolicy::drop());

// Each unordered pair is computed once (optionally in parallel); the result
// does not depend on the schedule. All diagrams must share hom_dim.
DistanceMatrix pairwise_distance_matrix(const std::vector<PersistenceDiagram>& diagrams,
                                        const InfinitePolicy& policy = InfinitePolicy::drop(),
                                        int threads = 1);

} // namespace tda
