#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tda/matching.hpp"
#include "tda/matrix.hpp"
#include "tda/shapes.hpp"
#include "tda/simplicial.hpp"

namespace tda {

// Numeric CSV: one row per record, comma-separated values, '#' comments and
// blank lines ignored. Rows must be rectangular.
RealMatrix read_matrix_csv(const std::filesystem::path& path);

// Rows are points; any dimension >= 1.
PointCloud read_point_cloud_csv(const std::filesystem::path& path);

// Rows are planar vertices in cycle order; exactly two columns.
Polygon read_polygon_csv(const std::filesystem::path& path);

void write_distance_matrix_csv(const std::filesystem::path& path,
                               const std::vector<std::string>& names,
                               const DistanceMatrix& distances);

// Columns: param,run,p_value.
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows);

} // namespace tda
