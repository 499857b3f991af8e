#include "tda/rips.hpp"

#include <algorithm>
#include <stdexcept>

#include "tda/persistence.hpp"

namespace tda {

double cloud_diameter(const PointCloud& cloud) {
    validate_point_cloud(cloud);
    double diam = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = i + 1; j < cloud.size(); ++j) {
            diam = std::max(diam, euclidean_distance(cloud.points[i], cloud.points[j]));
        }
    }
    return diam;
}

namespace {

// Depth-first clique enumeration. `candidates` holds vertices > back of
// `current` adjacent to everything in `current`; `value` is the max edge
// length inside `current`.
void extend_cliques(const std::vector<std::vector<double>>& dist,
                    const std::vector<std::vector<int>>& neighbors, int max_dim,
                    std::vector<int>& current, double value,
                    const std::vector<int>& candidates, FilteredComplex& out) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const int w = candidates[k];
        double new_value = value;
        for (int u : current) new_value = std::max(new_value, dist[u][w]);

        current.push_back(w);
        out.simplices.push_back({current, new_value});

        if (static_cast<int>(current.size()) - 1 < max_dim) {
            std::vector<int> next;
            for (std::size_t k2 = k + 1; k2 < candidates.size(); ++k2) {
                const int c = candidates[k2];
                if (std::binary_search(neighbors[w].begin(), neighbors[w].end(), c))
                    next.push_back(c);
            }
            if (!next.empty())
                extend_cliques(dist, neighbors, max_dim, current, new_value, next, out);
        }
        current.pop_back();
    }
}

} // namespace

FilteredComplex rips_filtration(const PointCloud& cloud, int max_dim,
                                std::optional<double> max_radius) {
    validate_point_cloud(cloud);
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");

    const std::size_t n = cloud.size();
    const double radius = max_radius.value_or(cloud_diameter(cloud));
    if (radius < 0.0) throw std::invalid_argument("max_radius must be >= 0");

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<int>> neighbors(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = euclidean_distance(cloud.points[i], cloud.points[j]);
            dist[i][j] = dist[j][i] = d;
            if (d <= radius) {
                neighbors[i].push_back(static_cast<int>(j));
                neighbors[j].push_back(static_cast<int>(i));
            }
        }
    }
    for (auto& adj : neighbors) std::sort(adj.begin(), adj.end());

    FilteredComplex complex;
    for (std::size_t i = 0; i < n; ++i)
        complex.simplices.push_back({{static_cast<int>(i)}, 0.0});

    if (max_dim >= 1) {
        std::vector<int> current;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> candidates;
            for (int j : neighbors[i]) {
                if (j > static_cast<int>(i)) candidates.push_back(j);
            }
            current.assign(1, static_cast<int>(i));
            extend_cliques(dist, neighbors, max_dim, current, 0.0, candidates, complex);
        }
    }
    return complex;
}

PersistenceDiagram rips_h0_diagram(const PointCloud& cloud) {
    validate_point_cloud(cloud);
    const std::size_t n = cloud.size();
    std::vector<WeightedEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.push_back({static_cast<int>(i), static_cast<int>(j),
                             euclidean_distance(cloud.points[i], cloud.points[j])});
        }
    }
    return zero_dim_persistence(edges, static_cast<int>(n),
                                std::vector<double>(n, 0.0));
}

} // namespace tda
