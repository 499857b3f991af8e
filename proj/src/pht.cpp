#include "tda/pht.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tda/matching.hpp"
#include "tda/parallel.hpp"
#include "tda/persistence.hpp"

namespace tda {
namespace {

std::vector<double> vertex_heights(const Polygon& polygon,
                                   const std::array<double, 2>& direction) {
    const double norm = std::hypot(direction[0], direction[1]);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("direction must be a unit vector");
    std::vector<double> heights(polygon.vertices.size());
    for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
        heights[i] = polygon.vertices[i][0] * direction[0] +
                     polygon.vertices[i][1] * direction[1];
    }
    return heights;
}

// Degree-0 diagram of a height function on the cycle graph; essential
// classes truncated at the maximum height.
PersistenceDiagram truncated_h0(const std::vector<double>& heights) {
    const int n = static_cast<int>(heights.size());
    std::vector<WeightedEdge> edges;
    edges.reserve(heights.size());
    double cap = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        edges.push_back({std::min(i, j), std::max(i, j), std::max(heights[i], heights[j])});
        cap = std::max(cap, heights[i]);
    }
    const PersistenceDiagram raw =
        zero_dim_persistence(edges, n, heights);
    std::vector<PersistencePoint> points;
    points.reserve(raw.size());
    for (const auto& p : raw.points()) {
        points.push_back({p.birth, std::isinf(p.death) ? cap : p.death});
    }
    return make_diagram(std::move(points), 0);
}

} // namespace

FilteredComplex height_filtration(const Polygon& polygon,
                                  const std::array<double, 2>& direction) {
    validate_polygon(polygon);
    const std::vector<double> heights = vertex_heights(polygon, direction);

    FilteredComplex complex;
    const int n = static_cast<int>(polygon.vertices.size());
    for (int i = 0; i < n; ++i) complex.simplices.push_back({{i}, heights[i]});
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        complex.simplices.push_back(
            {{std::min(i, j), std::max(i, j)}, std::max(heights[i], heights[j])});
    }
    return complex;
}

PhtRepresentation pht(const Polygon& polygon, int n_directions, bool normalize,
                      int threads) {
    validate_polygon(polygon);
    if (n_directions < 1) throw std::invalid_argument("n_directions must be >= 1");

    Polygon shape = polygon;
    if (normalize) {
        double cx = 0.0, cy = 0.0;
        for (const auto& v : shape.vertices) {
            cx += v[0];
            cy += v[1];
        }
        cx /= static_cast<double>(shape.vertices.size());
        cy /= static_cast<double>(shape.vertices.size());
        double max_norm = 0.0;
        for (auto& v : shape.vertices) {
            v[0] -= cx;
            v[1] -= cy;
            max_norm = std::max(max_norm, std::hypot(v[0], v[1]));
        }
        if (max_norm == 0.0)
            throw std::invalid_argument("degenerate polygon: zero extent");
        for (auto& v : shape.vertices) {
            v[0] /= max_norm;
            v[1] /= max_norm;
        }
    }

    PhtRepresentation rep;
    rep.directions.resize(n_directions);
    rep.diagrams.resize(n_directions);
    for (int k = 0; k < n_directions; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n_directions;
        rep.directions[k] = {std::cos(angle), std::sin(angle)};
    }
    parallel_for(static_cast<std::size_t>(n_directions), threads, [&](std::size_t k) {
        rep.diagrams[k] = truncated_h0(vertex_heights(shape, rep.directions[k]));
    });
    return rep;
}

double pht_distance(const PhtRepresentation& a, const PhtRepresentation& b) {
    if (a.directions.size() != b.directions.size())
        throw std::invalid_argument("direction counts differ");
    for (std::size_t k = 0; k < a.directions.size(); ++k) {
        if (std::abs(a.directions[k][0] - b.directions[k][0]) > 1e-12 ||
            std::abs(a.directions[k][1] - b.directions[k][1]) > 1e-12)
            throw std::invalid_argument("direction sets differ");
    }
    const std::size_t n = a.directions.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = diagram_distance(a.diagrams[k], b.diagrams[k]);
        total += d * d;
    }
    return std::sqrt(2.0 * std::numbers::pi / static_cast<double>(n) * total);
}

} // namespace tda
