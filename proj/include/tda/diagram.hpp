#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace tda {

// A single off-diagonal feature. Birth is always finite; death may be
// +infinity for essential classes. Invariant: birth < death.
struct PersistencePoint {
    double birth = 0.0;
    double death = 0.0;

    friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
};

bool point_less(const PersistencePoint& a, const PersistencePoint& b);

// Multiset of persistence points of one homology degree. The countably
// infinite diagonal is implicit and never stored; zero-persistence input
// points are dropped at construction because they are indistinguishable
// from diagonal copies. Points are kept sorted by (birth, death) so that
// multiset equality is plain vector equality.
//
// Diagrams are immutable after construction (build them with make_diagram)
// and safe to share across threads.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;

    const std::vector<PersistencePoint>& points() const { return points_; }
    int hom_dim() const { return hom_dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

    friend PersistenceDiagram make_diagram(std::vector<PersistencePoint> points,
                                           int hom_dim);

private:
    std::vector<PersistencePoint> points_;
    int hom_dim_ = 0;
};

// Validates and canonicalizes a diagram. Points with birth == death are
// silently dropped. Throws std::invalid_argument on birth > death, NaN
// coordinates, an infinite birth, or a negative hom_dim.
PersistenceDiagram make_diagram(std::vector<PersistencePoint> points, int hom_dim);
PersistenceDiagram make_diagram(const std::vector<std::pair<double, double>>& points,
                                int hom_dim);

// Nearest point of the diagonal in the plane metric: ((b+d)/2, (b+d)/2).
// Throws if the death coordinate is infinite (projection undefined).
std::pair<double, double> diagonal_projection(const PersistencePoint& p);

} // namespace tda
