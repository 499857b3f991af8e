#include "tda/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tda {

bool point_less(const PersistencePoint& a, const PersistencePoint& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

PersistenceDiagram make_diagram(std::vector<PersistencePoint> points, int hom_dim) {
    if (hom_dim < 0) throw std::invalid_argument("hom_dim must be nonnegative");

    std::vector<PersistencePoint> kept;
    kept.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (std::isnan(p.birth) || std::isnan(p.death)) {
            throw std::invalid_argument("point " + std::to_string(i) +
                                        ": coordinates must not be NaN");
        }
        if (std::isinf(p.birth)) {
            throw std::invalid_argument("point " + std::to_string(i) +
                                        ": birth must be finite");
        }
        if (p.birth > p.death) {
            throw std::invalid_argument("point " + std::to_string(i) +
                                        ": birth exceeds death");
        }
        if (p.birth == p.death) continue; // lives on the diagonal
        kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(), point_less);

    PersistenceDiagram d;
    d.points_ = std::move(kept);
    d.hom_dim_ = hom_dim;
    return d;
}

PersistenceDiagram make_diagram(const std::vector<std::pair<double, double>>& points,
                                int hom_dim) {
    std::vector<PersistencePoint> pts;
    pts.reserve(points.size());
    for (const auto& [b, d] : points) pts.push_back({b, d});
    return make_diagram(std::move(pts), hom_dim);
}

std::pair<double, double> diagonal_projection(const PersistencePoint& p) {
    if (std::isinf(p.death)) {
        throw std::invalid_argument(
            "diagonal projection undefined for infinite death");
    }
    const double mid = 0.5 * (p.birth + p.death);
    return {mid, mid};
}

} // namespace tda
