#include "tda/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tda/parallel.hpp"

namespace tda {
namespace {

double squared_point_cost(const PersistencePoint& a, const PersistencePoint& b) {
    const double db = a.birth - b.birth;
    const double dd = a.death - b.death;
    return db * db + dd * dd;
}

double squared_diagonal_cost(const PersistencePoint& p) {
    const double gap = p.death - p.birth;
    return 0.5 * gap * gap;
}

void require_finite_deaths(const PersistenceDiagram& d, const char* which) {
    for (const auto& p : d.points()) {
        if (std::isinf(p.death)) {
            throw std::invalid_argument(std::string(which) +
                                        ": infinite death present; apply an "
                                        "InfinitePolicy first");
        }
    }
}

} // namespace

InfinitePolicy InfinitePolicy::truncate(double cap) {
    if (!std::isfinite(cap)) throw std::invalid_argument("truncation cap must be finite");
    return {Mode::truncate, cap};
}

PersistenceDiagram apply_infinite_policy(const PersistenceDiagram& diagram,
                                         const InfinitePolicy& policy) {
    std::vector<PersistencePoint> kept;
    kept.reserve(diagram.size());
    if (policy.mode == InfinitePolicy::Mode::drop) {
        for (const auto& p : diagram.points()) {
            if (!std::isinf(p.death)) kept.push_back(p);
        }
    } else {
        for (const auto& p : diagram.points()) {
            if (p.birth > policy.cap || (!std::isinf(p.death) && p.death > policy.cap)) {
                throw std::invalid_argument(
                    "truncation cap " + std::to_string(policy.cap) +
                    " lies below a finite coordinate of the diagram");
            }
            kept.push_back({p.birth, std::isinf(p.death) ? policy.cap : p.death});
        }
    }
    return make_diagram(std::move(kept), diagram.hom_dim());
}

CostMatrix build_cost_matrix(const PersistenceDiagram& x, const PersistenceDiagram& y) {
    require_finite_deaths(x, "first diagram");
    require_finite_deaths(y, "second diagram");

    const std::size_t n = x.size();
    const std::size_t m = y.size();
    CostMatrix cost;
    cost.size = n + m;
    cost.entries.assign(cost.size * cost.size, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const double diag_i = squared_diagonal_cost(x.points()[i]);
        for (std::size_t j = 0; j < m; ++j) {
            cost.at(i, j) = squared_point_cost(x.points()[i], y.points()[j]);
        }
        for (std::size_t j = m; j < cost.size; ++j) cost.at(i, j) = diag_i;
    }
    for (std::size_t j = 0; j < m; ++j) {
        const double diag_j = squared_diagonal_cost(y.points()[j]);
        for (std::size_t i = n; i < cost.size; ++i) cost.at(i, j) = diag_j;
    }
    return cost;
}

Matching hungarian_assign(const CostMatrix& cost) {
    const std::size_t n = cost.size;
    if (cost.entries.size() != n * n)
        throw std::invalid_argument("cost matrix storage does not match its size");
    for (const double c : cost.entries) {
        if (!std::isfinite(c) || c < 0.0)
            throw std::invalid_argument("cost entries must be finite and nonnegative");
    }

    Matching result;
    result.assignment.assign(n, 0);
    if (n == 0) return result;

    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t none = n; // virtual column / unmatched marker

    std::vector<double> row_pot(n, 0.0), col_pot(n + 1, 0.0), min_reduced(n + 1, 0.0);
    std::vector<std::size_t> col_row(n + 1, none); // column -> matched row
    std::vector<std::size_t> prev_col(n + 1, none);
    std::vector<char> visited(n + 1, 0);

    for (std::size_t row = 0; row < n; ++row) {
        // Grow an alternating tree from the virtual column until we reach a
        // free column, updating potentials by the minimum reduced slack.
        col_row[none] = row;
        std::size_t cur = none;
        std::fill(min_reduced.begin(), min_reduced.end(), inf);
        std::fill(visited.begin(), visited.end(), 0);

        do {
            visited[cur] = 1;
            const std::size_t r = col_row[cur];
            double delta = inf;
            std::size_t next = none;

            for (std::size_t j = 0; j < n; ++j) {
                if (visited[j]) continue;
                const double reduced = cost.at(r, j) - row_pot[r] - col_pot[j];
                if (reduced < min_reduced[j]) {
                    min_reduced[j] = reduced;
                    prev_col[j] = cur;
                }
                if (min_reduced[j] < delta) {
                    delta = min_reduced[j];
                    next = j;
                }
            }

            for (std::size_t j = 0; j <= n; ++j) {
                if (visited[j]) {
                    row_pot[col_row[j]] += delta;
                    col_pot[j] -= delta;
                } else {
                    min_reduced[j] -= delta;
                }
            }
            cur = next;
        } while (col_row[cur] != none);

        // Augment along the recorded path back to the virtual column.
        while (cur != none) {
            const std::size_t prev = prev_col[cur];
            col_row[cur] = col_row[prev];
            cur = prev;
        }
    }

    for (std::size_t j = 0; j < n; ++j) result.assignment[col_row[j]] = j;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost.at(i, result.assignment[i]);
    result.total_cost = total;
    return result;
}

double diagram_distance(const PersistenceDiagram& x, const PersistenceDiagram& y,
                        const InfinitePolicy& policy) {
    if (x.hom_dim() != y.hom_dim()) {
        throw std::invalid_argument("homology dimensions differ: " +
                                    std::to_string(x.hom_dim()) + " vs " +
                                    std::to_string(y.hom_dim()));
    }
    const PersistenceDiagram px = apply_infinite_policy(x, policy);
    const PersistenceDiagram py = apply_infinite_policy(y, policy);
    if (px.empty() && py.empty()) return 0.0;
    const Matching match = hungarian_assign(build_cost_matrix(px, py));
    return std::sqrt(match.total_cost);
}

DistanceMatrix pairwise_distance_matrix(const std::vector<PersistenceDiagram>& diagrams,
                                        const InfinitePolicy& policy, int threads) {
    const std::size_t n = diagrams.size();
    for (const auto& d : diagrams) {
        if (d.hom_dim() != diagrams.front().hom_dim())
            throw std::invalid_argument("all diagrams must share hom_dim");
    }

    DistanceMatrix dist;
    dist.n = n;
    dist.entries.assign(n * n, 0.0);
    if (n < 2) return dist;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        const double d = diagram_distance(diagrams[i], diagrams[j], policy);
        dist.at(i, j) = d;
        dist.at(j, i) = d;
    });
    return dist;
}

} // namespace tda
