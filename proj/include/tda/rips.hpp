#pragma once

#include <optional>

#include "tda/diagram.hpp"
#include "tda/simplicial.hpp"

namespace tda {

// Largest pairwise distance of the cloud (0 for a single point).
double cloud_diameter(const PointCloud& cloud);

// Vietoris-Rips filtration: vertices at 0, edge (i,j) at ||xi-xj|| when that
// is <= max_radius, and every higher simplex up to max_dim at the maximum of
// its edge values (flag completion). max_radius defaults to the cloud
// diameter, so degree-0 classes always finish merging.
FilteredComplex rips_filtration(const PointCloud& cloud, int max_dim,
                                std::optional<double> max_radius = std::nullopt);

// Degree-0 Rips diagram via the union-find fast path, skipping complex
// construction entirely.
PersistenceDiagram rips_h0_diagram(const PointCloud& cloud);

} // namespace tda
