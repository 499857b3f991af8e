#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tda/simplicial.hpp"

namespace tda {

// Planar sampling supports: a circle of radius r1 centred at the origin; a
// wedge of two circles tangent at the origin with centres (-r1, 0) and
// (r2, 0); or two concentric circles of radii r1 and r2. Points are drawn
// uniformly by arc length (a circle is picked with probability proportional
// to its circumference) and then blurred with isotropic Gaussian noise of
// per-coordinate standard deviation sigma.
struct ShapeSpec {
    enum class Kind { circle, wedge, concentric };

    Kind kind = Kind::circle;
    double r1 = 1.0;
    double r2 = 0.0; // unused for circle
    double sigma = 0.0;

    static ShapeSpec circle(double radius, double sigma = 0.0);
    static ShapeSpec wedge(double r1, double r2, double sigma = 0.0);
    static ShapeSpec concentric(double r1, double r2, double sigma = 0.0);
};

// Deterministic given (spec, m, seed).
PointCloud sample_shape(const ShapeSpec& spec, int m, std::uint64_t seed);

// Which ingredient the sweep grid varies.
enum class SweepParam {
    noise_sigma,     // both shapes get sigma = grid value
    separation_beta, // concentric shapes get radii (1 - g, 1 + g)
};

struct SweepConfig {
    ShapeSpec shape_a;
    ShapeSpec shape_b;
    SweepParam param = SweepParam::noise_sigma;
    std::vector<double> grid;
    int clouds_per_group = 20;
    int points_per_cloud = 50;
    int hom_dim = 1; // 0 or 1
    int reps = 1000;
    int runs = 5;
    std::uint64_t seed = 0;
};

struct SweepRow {
    double param = 0.0;
    int run = 0;
    double p_value = 0.0;
};

// For every (grid value, run) cell: sample the clouds, compute diagrams of
// the configured degree (essential classes dropped), run the randomization
// test, and record the p value. Rows come back sorted by (grid value, run)
// regardless of scheduling.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads = 1);

// Named parameter sets mirroring the simulation figures: "fig3" and "fig4"
// sweep noise on circle-vs-wedge H1 diagrams; "fig5"/"fig6"/"fig7" sweep
// the concentric separation on H0 diagrams with 5/10/20 points per cloud.
// `scale` in (0, 1] shrinks grid resolution, runs, and replicates from the
// full-size sweep (scale = 1) to something desk-sized.
SweepConfig sweep_preset(std::string_view name, double scale, std::uint64_t seed);

const std::vector<std::string>& sweep_preset_names();

} // namespace tda
