#pragma once

#include <array>
#include <vector>

#include "tda/diagram.hpp"
#include "tda/simplicial.hpp"

namespace tda {

// Lower-star filtration of the polygon's cycle graph for a unit direction:
// vertex i enters at <x_i, v>, edge (i, i+1) at the larger endpoint value.
// The direction must be unit length within 1e-12.
FilteredComplex height_filtration(const Polygon& polygon,
                                  const std::array<double, 2>& direction);

// One degree-0 diagram per direction, directions evenly spaced on the
// circle.
struct PhtRepresentation {
    std::vector<std::array<double, 2>> directions;
    std::vector<PersistenceDiagram> diagrams;
};

// Persistent homology transform. Directions are (cos 2*pi*k/n, sin 2*pi*k/n).
// With normalize set, the vertex centroid is moved to the origin and the
// polygon scaled so the largest vertex norm is 1. Essential classes are
// truncated at each direction's maximum height, so all diagrams are finite.
PhtRepresentation pht(const Polygon& polygon, int n_directions, bool normalize,
                      int threads = 1);

// sqrt((2*pi/n) * sum of squared per-direction diagram distances); a
// Riemann-sum approximation of the integral over the circle of directions.
// Both representations must carry the same direction set.
double pht_distance(const PhtRepresentation& a, const PhtRepresentation& b);

} // namespace tda
