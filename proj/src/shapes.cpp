#include "tda/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tda/nhst.hpp"
#include "tda/parallel.hpp"
#include "tda/persistence.hpp"
#include "tda/rips.hpp"
#include "tda/rng.hpp"

namespace tda {
namespace {

void validate_spec(const ShapeSpec& spec) {
    if (spec.sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
    if (spec.r1 <= 0.0) throw std::invalid_argument("radius must be > 0");
    if (spec.kind != ShapeSpec::Kind::circle && spec.r2 <= 0.0)
        throw std::invalid_argument("radius must be > 0");
}

ShapeSpec with_grid_value(const ShapeSpec& base, SweepParam param, double value) {
    ShapeSpec spec = base;
    if (param == SweepParam::noise_sigma) {
        spec.sigma = value;
    } else if (spec.kind == ShapeSpec::Kind::concentric) {
        spec.r1 = 1.0 - value;
        spec.r2 = 1.0 + value;
    }
    return spec;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    }
    return out;
}

PersistenceDiagram cloud_diagram(const PointCloud& cloud, int hom_dim) {
    if (hom_dim == 0) return rips_h0_diagram(cloud);
    const auto diagrams = compute_persistence(rips_filtration(cloud, hom_dim + 1),
                                              hom_dim);
    return diagrams[static_cast<std::size_t>(hom_dim)];
}

} // namespace

ShapeSpec ShapeSpec::circle(double radius, double sigma) {
    return {Kind::circle, radius, 0.0, sigma};
}

ShapeSpec ShapeSpec::wedge(double r1, double r2, double sigma) {
    return {Kind::wedge, r1, r2, sigma};
}

ShapeSpec ShapeSpec::concentric(double r1, double r2, double sigma) {
    return {Kind::concentric, r1, r2, sigma};
}

PointCloud sample_shape(const ShapeSpec& spec, int m, std::uint64_t seed) {
    validate_spec(spec);
    if (m < 1) throw std::invalid_argument("m must be >= 1");

    Rng rng(seed);
    PointCloud cloud;
    cloud.points.reserve(m);

    const bool two_circles = spec.kind != ShapeSpec::Kind::circle;
    const double p_first = two_circles ? spec.r1 / (spec.r1 + spec.r2) : 1.0;

    for (int i = 0; i < m; ++i) {
        double radius = spec.r1;
        double cx = 0.0;
        const bool first = !two_circles || rng.next_unit() < p_first;
        if (two_circles) {
            if (spec.kind == ShapeSpec::Kind::wedge) {
                radius = first ? spec.r1 : spec.r2;
                cx = first ? -spec.r1 : spec.r2;
            } else {
                radius = first ? spec.r1 : spec.r2;
            }
        }
        const double angle = 2.0 * std::numbers::pi * rng.next_unit();
        double x = cx + radius * std::cos(angle);
        double y = radius * std::sin(angle);
        x += spec.sigma * rng.next_normal();
        y += spec.sigma * rng.next_normal();
        cloud.points.push_back({x, y});
    }
    return cloud;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads) {
    if (config.grid.empty()) throw std::invalid_argument("sweep grid is empty");
    if (config.clouds_per_group < 2)
        throw std::invalid_argument("clouds_per_group must be >= 2");
    if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (config.hom_dim < 0 || config.hom_dim > 1)
        throw std::invalid_argument("hom_dim must be 0 or 1");
    validate_spec(config.shape_a);
    validate_spec(config.shape_b);

    const std::size_t cells =
        config.grid.size() * static_cast<std::size_t>(config.runs);
    std::vector<SweepRow> rows(cells);

    parallel_for(cells, threads, [&](std::size_t cell) {
        const std::size_t grid_index = cell / static_cast<std::size_t>(config.runs);
        const int run = static_cast<int>(cell % static_cast<std::size_t>(config.runs));
        const double value = config.grid[grid_index];
        const std::uint64_t cell_seed = derive_seed(derive_seed(config.seed, grid_index), run);

        const ShapeSpec spec_a = with_grid_value(config.shape_a, config.param, value);
        const ShapeSpec spec_b = with_grid_value(config.shape_b, config.param, value);

        const int per_group = config.clouds_per_group;
        std::vector<PersistenceDiagram> diagrams;
        diagrams.reserve(2 * per_group);
        for (int c = 0; c < 2 * per_group; ++c) {
            const ShapeSpec& spec = c < per_group ? spec_a : spec_b;
            const PointCloud cloud =
                sample_shape(spec, config.points_per_cloud,
                             derive_seed(cell_seed, static_cast<std::uint64_t>(c) + 1));
            diagrams.push_back(cloud_diagram(cloud, config.hom_dim));
        }

        const DistanceMatrix distances =
            pairwise_distance_matrix(diagrams, InfinitePolicy::drop());
        const TestResult result =
            randomization_test(distances, two_group_labeling(per_group, per_group),
                               config.reps, derive_seed(cell_seed, 0));
        rows[cell] = {value, run, result.p_value};
    });
    return rows;
}

SweepConfig sweep_preset(std::string_view name, double scale, std::uint64_t seed) {
    if (scale <= 0.0 || scale > 1.0)
        throw std::invalid_argument("scale must be in (0, 1]");

    SweepConfig config;
    config.seed = seed;

    int full_grid_points = 51;
    int full_runs = 5;
    int full_reps = 1000;

    if (name == "fig3" || name == "fig4") {
        config.shape_a = ShapeSpec::circle(1.0);
        config.shape_b = ShapeSpec::wedge(3.0 / 5.0, 4.0 / 5.0);
        config.param = SweepParam::noise_sigma;
        config.points_per_cloud = 50;
        config.hom_dim = 1;
        if (name == "fig4") {
            full_grid_points = 11;
            full_runs = 200;
            config.clouds_per_group = 10;
        } else {
            config.clouds_per_group = 20;
        }
    } else if (name == "fig5" || name == "fig6" || name == "fig7") {
        config.shape_a = ShapeSpec::circle(1.0);
        config.shape_b = ShapeSpec::concentric(1.0, 1.0);
        config.param = SweepParam::separation_beta;
        config.clouds_per_group = 20;
        config.hom_dim = 0;
        config.points_per_cloud = name == "fig5" ? 5 : (name == "fig6" ? 10 : 20);
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }

    const int grid_points = std::max(
        2, 1 + static_cast<int>(std::lround((full_grid_points - 1) * scale)));
    config.grid = linspace(0.0, 0.5, grid_points);
    config.runs = std::max(1, static_cast<int>(std::lround(full_runs * scale)));
    config.reps = std::max(100, static_cast<int>(std::lround(full_reps * scale)));
    return config;
}

const std::vector<std::string>& sweep_preset_names() {
    static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6", "fig7"};
    return names;
}

} // namespace tda
