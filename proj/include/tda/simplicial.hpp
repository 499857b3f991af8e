#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace tda {

// Simplex with strictly increasing vertex ids and a finite filtration value.
struct Simplex {
    std::vector<int> vertices;
    double value = 0.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Simplices with monotone filtration values, closed under faces. The common
// input to persistence computation; validity is checked there.
struct FilteredComplex {
    std::vector<Simplex> simplices;
};

struct PointCloud {
    std::vector<std::vector<double>> points; // all the same dimension >= 1

    std::size_t size() const { return points.size(); }
};

// Closed planar cycle; consecutive vertices (including last-to-first) must
// be distinct.
struct Polygon {
    std::vector<std::array<double, 2>> vertices;
};

void validate_point_cloud(const PointCloud& cloud);
void validate_polygon(const Polygon& polygon);

// Face-closure plus monotonicity check; throws std::invalid_argument with
// the offending simplex on failure.
void validate_complex(const FilteredComplex& complex);

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

} // namespace tda
