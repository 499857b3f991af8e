// Test-only reference implementations. Each one is an intentionally naive,
// independent route to a value the library computes the fast way: exhaustive
// enumeration instead of the Hungarian solver, dense GF(2) elimination
// instead of the sparse reduction, and the mean-based variance formula.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "tda/diagram.hpp"
#include "tda/matching.hpp"
#include "tda/simplicial.hpp"

namespace oracle {

// Minimum assignment cost by trying all permutations.
inline double brute_force_assignment(const tda::CostMatrix& cost) {
    const std::size_t n = cost.size;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    if (n == 0) return 0.0;
    do {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += cost.at(i, perm[i]);
        best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace detail {

inline double pair_cost(const tda::PersistencePoint& a, const tda::PersistencePoint& b) {
    const double db = a.birth - b.birth;
    const double dd = a.death - b.death;
    return db * db + dd * dd;
}

inline double diag_cost(const tda::PersistencePoint& p) {
    const double gap = p.death - p.birth;
    return 0.5 * gap * gap;
}

// Recursively match each point of X to an unused point of Y or to the
// diagonal; leftover Y points pay their own diagonal cost.
inline double match_rec(const std::vector<tda::PersistencePoint>& xs,
                        const std::vector<tda::PersistencePoint>& ys, std::size_t i,
                        std::vector<char>& used) {
    if (i == xs.size()) {
        double rest = 0.0;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (!used[j]) rest += diag_cost(ys[j]);
        }
        return rest;
    }
    double best = diag_cost(xs[i]) + match_rec(xs, ys, i + 1, used);
    for (std::size_t j = 0; j < ys.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        best = std::min(best, pair_cost(xs[i], ys[j]) + match_rec(xs, ys, i + 1, used));
        used[j] = 0;
    }
    return best;
}

} // namespace detail

// Exhaustive minimum over all augmented bijections, as the square root of
// the minimal total squared cost. Both diagrams must be finite-death.
inline double brute_force_diagram_distance(const tda::PersistenceDiagram& x,
                                           const tda::PersistenceDiagram& y) {
    std::vector<char> used(y.size(), 0);
    return std::sqrt(detail::match_rec(x.points(), y.points(), 0, used));
}

// Multiset of (birth, death, degree) bars computed by dense GF(2) Gaussian
// elimination on the full boundary matrix. Infinite deaths are encoded as
// +infinity.
struct Bar {
    double birth;
    double death;
    int degree;

    friend auto operator<=>(const Bar&, const Bar&) = default;
};

inline std::vector<Bar> dense_reduction_bars(const tda::FilteredComplex& complex) {
    const std::size_t n = complex.simplices.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& sa = complex.simplices[a];
        const auto& sb = complex.simplices[b];
        if (sa.value != sb.value) return sa.value < sb.value;
        return sa.dim() < sb.dim();
    });

    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t pos = 0; pos < n; ++pos) {
        position[complex.simplices[order[pos]].vertices] = pos;
    }

    // Dense 0/1 boundary matrix, column per simplex.
    std::vector<std::vector<char>> matrix(n, std::vector<char>(n, 0));
    for (std::size_t pos = 0; pos < n; ++pos) {
        const auto& s = complex.simplices[order[pos]];
        if (s.dim() == 0) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < s.vertices.size(); ++i) {
                if (i != drop) face.push_back(s.vertices[i]);
            }
            matrix[pos][position.at(face)] = 1;
        }
    }

    auto lowest = [&](std::size_t col) -> long {
        for (long r = static_cast<long>(n) - 1; r >= 0; --r) {
            if (matrix[col][static_cast<std::size_t>(r)]) return r;
        }
        return -1;
    };

    std::vector<long> owner(n, -1);
    std::vector<Bar> bars;
    for (std::size_t col = 0; col < n; ++col) {
        long low = lowest(col);
        while (low >= 0 && owner[static_cast<std::size_t>(low)] >= 0) {
            const std::size_t other =
                static_cast<std::size_t>(owner[static_cast<std::size_t>(low)]);
            for (std::size_t r = 0; r < n; ++r) matrix[col][r] ^= matrix[other][r];
            low = lowest(col);
        }
        if (low >= 0) owner[static_cast<std::size_t>(low)] = static_cast<long>(col);
    }

    for (std::size_t pos = 0; pos < n; ++pos) {
        if (lowest(pos) >= 0) continue; // not a creator
        const auto& s = complex.simplices[order[pos]];
        const double death =
            owner[pos] >= 0
                ? complex.simplices[order[static_cast<std::size_t>(owner[pos])]].value
                : std::numeric_limits<double>::infinity();
        if (s.value < death) bars.push_back({s.value, death, s.dim()});
    }
    std::sort(bars.begin(), bars.end());
    return bars;
}

// The textbook estimator that first forms the mean.
inline double mean_based_variance(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double acc = 0.0;
    for (const double v : values) acc += (v - mean) * (v - mean);
    return acc / (n - 1.0);
}

} // namespace oracle
