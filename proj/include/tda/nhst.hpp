#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tda/matching.hpp"

namespace tda {

// Group assignment over diagram indices {0..n-1}: disjoint groups covering
// every index, each of size >= 2 (the variance denominators need it).
struct Labeling {
    std::vector<std::vector<int>> groups;
};

void validate_labeling(const Labeling& labeling, std::size_t n);

// Groups {0..n1-1} and {n1..n1+n2-1}.
Labeling two_group_labeling(int n1, int n2);

// Sample variance computed from pairwise differences,
//   (1 / (2 n (n-1))) * sum_{i,j} (x_i - x_j)^2,
// which equals the usual mean-based estimator without forming the mean.
double within_group_variance(std::span<const double> values);

// Test statistic: the sum over groups of the within-group variance of the
// pairwise diagram distances,
//   sum_m (1 / (2 n_m (n_m-1))) * sum_{i,j in group m} d[i][j]^2.
// Two groups give the basic statistic; more groups give the k-sample
// analogue. Small when the grouping is coherent.
double joint_loss(const DistanceMatrix& distances, const Labeling& labeling);

struct TestResult {
    double observed_loss = 0.0;
    double p_value = 0.0;       // always count / replicates, exactly
    std::int64_t replicates = 0;
    std::int64_t count = 0;     // relabelings with loss <= observed
    std::uint64_t seed = 0;
};

// Randomization test: draws `replicates` uniform group-size-preserving
// relabelings, counts those whose loss is <= the observed loss (ties count),
// and reports p = count / replicates. Fully reproducible from the seed, and
// parallel execution (per-replicate derived substreams) returns the same
// count as sequential.
TestResult randomization_test(const DistanceMatrix& distances, const Labeling& observed,
                              std::int64_t replicates, std::uint64_t seed,
                              int threads = 1);

// Enumerates every group-size-preserving relabeling (the observed one
// included) and returns the exact tie-inclusive fraction. Refuses to run
// past max_relabelings, pointing at randomization_test instead.
TestResult exhaustive_test(const DistanceMatrix& distances, const Labeling& observed,
                           std::uint64_t max_relabelings = 1'000'000);

} // namespace tda
