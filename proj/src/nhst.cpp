#include "tda/nhst.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tda/parallel.hpp"
#include "tda/rng.hpp"

namespace tda {
namespace {

// Loss over squared distances for groups laid out as consecutive blocks of
// `arrangement`. Blocks are sorted before summation so the float result
// depends only on the group *sets*; relabelings that reproduce the observed
// partition then tie exactly.
class LossEvaluator {
public:
    LossEvaluator(const DistanceMatrix& distances, std::vector<std::size_t> sizes)
        : n_(distances.n), sizes_(std::move(sizes)), squared_(n_ * n_) {
        for (std::size_t i = 0; i < squared_.size(); ++i) {
            squared_[i] = distances.entries[i] * distances.entries[i];
        }
    }

    const std::vector<std::size_t>& sizes() const { return sizes_; }

    double operator()(std::vector<int>& arrangement) const {
        double loss = 0.0;
        std::size_t offset = 0;
        for (const std::size_t size : sizes_) {
            const auto begin = arrangement.begin() + static_cast<std::ptrdiff_t>(offset);
            const auto end = begin + static_cast<std::ptrdiff_t>(size);
            std::sort(begin, end);
            double pair_sum = 0.0;
            for (auto it = begin; it != end; ++it) {
                const std::size_t row = static_cast<std::size_t>(*it) * n_;
                for (auto jt = it + 1; jt != end; ++jt) pair_sum += squared_[row + *jt];
            }
            loss += pair_sum / (static_cast<double>(size) * static_cast<double>(size - 1));
            offset += size;
        }
        return loss;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> sizes_;
    std::vector<double> squared_;
};

std::vector<int> flatten_groups(const Labeling& labeling) {
    std::vector<int> flat;
    for (const auto& g : labeling.groups) flat.insert(flat.end(), g.begin(), g.end());
    return flat;
}

} // namespace

void validate_labeling(const Labeling& labeling, std::size_t n) {
    if (labeling.groups.size() < 2)
        throw std::invalid_argument("labeling needs at least 2 groups");
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& group : labeling.groups) {
        if (group.size() < 2)
            throw std::invalid_argument("every group needs at least 2 members");
        for (const int idx : group) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= n)
                throw std::invalid_argument("group index " + std::to_string(idx) +
                                            " out of range");
            if (seen[static_cast<std::size_t>(idx)])
                throw std::invalid_argument("group index " + std::to_string(idx) +
                                            " appears twice");
            seen[static_cast<std::size_t>(idx)] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument("groups must cover every index 0.." +
                                    std::to_string(n - 1));
}

Labeling two_group_labeling(int n1, int n2) {
    Labeling labeling;
    labeling.groups.resize(2);
    for (int i = 0; i < n1; ++i) labeling.groups[0].push_back(i);
    for (int i = 0; i < n2; ++i) labeling.groups[1].push_back(n1 + i);
    return labeling;
}

double within_group_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("variance needs at least 2 values");
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double diff = values[i] - values[j];
            pair_sum += diff * diff;
        }
    }
    // sum over ordered pairs is twice the i<j sum, so the 1/(2n(n-1))
    // prefactor collapses to 1/(n(n-1)).
    return pair_sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double joint_loss(const DistanceMatrix& distances, const Labeling& labeling) {
    validate_labeling(labeling, distances.n);
    std::vector<std::size_t> sizes;
    for (const auto& g : labeling.groups) sizes.push_back(g.size());
    const LossEvaluator loss(distances, std::move(sizes));
    std::vector<int> arrangement = flatten_groups(labeling);
    return loss(arrangement);
}

TestResult randomization_test(const DistanceMatrix& distances, const Labeling& observed,
                              std::int64_t replicates, std::uint64_t seed,
                              int threads) {
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    validate_labeling(observed, distances.n);

    std::vector<std::size_t> sizes;
    for (const auto& g : observed.groups) sizes.push_back(g.size());
    const LossEvaluator loss(distances, std::move(sizes));

    std::vector<int> arrangement = flatten_groups(observed);
    const double observed_loss = loss(arrangement);

    const int workers = resolve_threads(threads);
    const std::size_t n_chunks =
        workers <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(workers) * 4,
                                                 static_cast<std::size_t>(replicates));
    std::vector<std::int64_t> chunk_counts(n_chunks, 0);

    parallel_for(n_chunks, workers, [&](std::size_t chunk) {
        const std::int64_t begin =
            static_cast<std::int64_t>(chunk) * replicates / static_cast<std::int64_t>(n_chunks);
        const std::int64_t end = (static_cast<std::int64_t>(chunk) + 1) * replicates /
                                 static_cast<std::int64_t>(n_chunks);
        std::vector<int> indices(distances.n);
        std::int64_t local = 0;
        for (std::int64_t r = begin; r < end; ++r) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
            std::iota(indices.begin(), indices.end(), 0);
            shuffle(indices, rng);
            if (loss(indices) <= observed_loss) ++local;
        }
        chunk_counts[chunk] = local;
    });

    TestResult result;
    result.observed_loss = observed_loss;
    result.replicates = replicates;
    result.count = std::accumulate(chunk_counts.begin(), chunk_counts.end(),
                                   std::int64_t{0});
    result.p_value = static_cast<double>(result.count) / static_cast<double>(replicates);
    result.seed = seed;
    return result;
}

namespace {

// Enumerate all ways to fill consecutive blocks of the given sizes with the
// indices 0..n-1, choosing each block as a sorted combination of what is
// left. Invokes visit(arrangement) once per relabeling.
template <typename Visit>
void enumerate_relabelings(std::vector<int>& pool, std::vector<int>& arrangement,
                           const std::vector<std::size_t>& sizes, std::size_t group,
                           Visit&& visit) {
    if (group == sizes.size()) {
        visit(arrangement);
        return;
    }
    const std::size_t k = sizes[group];
    if (group + 1 == sizes.size()) {
        // Last block is forced.
        arrangement.insert(arrangement.end(), pool.begin(), pool.end());
        visit(arrangement);
        arrangement.resize(arrangement.size() - pool.size());
        return;
    }
    std::vector<int> chosen(k);
    std::vector<std::size_t> pick(k);
    // Lexicographic combinations of positions in `pool`.
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        std::vector<int> rest;
        rest.reserve(pool.size() - k);
        std::size_t next_pick = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (next_pick < k && pick[next_pick] == i) {
                chosen[next_pick] = pool[i];
                ++next_pick;
            } else {
                rest.push_back(pool[i]);
            }
        }
        arrangement.insert(arrangement.end(), chosen.begin(), chosen.end());
        enumerate_relabelings(rest, arrangement, sizes, group + 1, visit);
        arrangement.resize(arrangement.size() - k);

        // Advance the combination.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (pick[i] != i + pool.size() - k) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace

TestResult exhaustive_test(const DistanceMatrix& distances, const Labeling& observed,
                           std::uint64_t max_relabelings) {
    validate_labeling(observed, distances.n);

    std::vector<std::size_t> sizes;
    for (const auto& g : observed.groups) sizes.push_back(g.size());

    // Multinomial count n! / (n1! ... nk!), with an early bail-out.
    unsigned __int128 total = 1;
    std::size_t assigned = 0;
    for (const std::size_t size : sizes) {
        for (std::size_t i = 1; i <= size; ++i) {
            ++assigned;
            total = total * assigned / i; // exact: running product of binomials
            if (total > max_relabelings) {
                throw std::runtime_error(
                    "exhaustive enumeration would exceed " +
                    std::to_string(max_relabelings) +
                    " relabelings; use randomization_test instead");
            }
        }
    }

    const LossEvaluator loss(distances, sizes);
    std::vector<int> arrangement = flatten_groups(observed);
    const double observed_loss = loss(arrangement);

    std::vector<int> pool(distances.n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> scratch;
    scratch.reserve(distances.n);
    std::int64_t enumerated = 0;
    std::int64_t count = 0;
    enumerate_relabelings(pool, scratch, sizes, 0, [&](std::vector<int>& arr) {
        std::vector<int> copy = arr;
        ++enumerated;
        if (loss(copy) <= observed_loss) ++count;
    });

    TestResult result;
    result.observed_loss = observed_loss;
    result.replicates = enumerated;
    result.count = count;
    result.p_value = static_cast<double>(count) / static_cast<double>(enumerated);
    result.seed = 0;
    return result;
}

} // namespace tda
