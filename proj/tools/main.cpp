// tda-nhst: persistence diagrams, matching distances, and randomization
// tests from the command line. Exit codes: 0 success, 1 usage error, 2 data
// or I/O error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tda/concurrence.hpp"
#include "tda/csv_io.hpp"
#include "tda/diagram_io.hpp"
#include "tda/format.hpp"
#include "tda/matching.hpp"
#include "tda/nhst.hpp"
#include "tda/persistence.hpp"
#include "tda/pht.hpp"
#include "tda/rips.hpp"
#include "tda/shapes.hpp"
#include "tda/version.hpp"

namespace {

namespace fs = std::filesystem;

int env_threads() {
    const char* raw = std::getenv("TDA_NHST_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        const int value = std::stoi(raw);
        return value < 0 ? 0 : value;
    } catch (const std::exception&) {
        return 0;
    }
}

// "drop" or "truncate=<cap>".
bool try_parse_inf_policy(const std::string& text, tda::InfinitePolicy& out) {
    if (text == "drop") {
        out = tda::InfinitePolicy::drop();
        return true;
    }
    const std::string prefix = "truncate=";
    if (text.rfind(prefix, 0) == 0) {
        const std::string cap_text = text.substr(prefix.size());
        char* end = nullptr;
        const double cap = std::strtod(cap_text.c_str(), &end);
        if (!cap_text.empty() && end == cap_text.c_str() + cap_text.size() &&
            std::isfinite(cap)) {
            out = tda::InfinitePolicy::truncate(cap);
            return true;
        }
    }
    return false;
}

tda::InfinitePolicy parse_inf_policy(const std::string& text) {
    tda::InfinitePolicy policy;
    if (!try_parse_inf_policy(text, policy))
        throw std::runtime_error("bad --inf value '" + text + "'");
    return policy;
}

const CLI::Validator inf_policy_validator(
    [](std::string& text) -> std::string {
        tda::InfinitePolicy ignored;
        return try_parse_inf_policy(text, ignored)
                   ? std::string{}
                   : "expected 'drop' or 'truncate=<cap>'";
    },
    "POLICY");

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::uint64_t pick_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
    if (seed_opt->count() > 0) return seed_flag;
    const std::uint64_t seed = entropy_seed();
    std::cerr << "note: no --seed given, using seed " << seed << "\n";
    return seed;
}

void write_diagrams_per_degree(const std::vector<tda::PersistenceDiagram>& diagrams,
                               const fs::path& out_dir) {
    fs::create_directories(out_dir);
    for (const auto& diagram : diagrams) {
        const fs::path file = out_dir / ("h" + std::to_string(diagram.hom_dim()) + ".dgm");
        tda::write_diagram_file(diagram, file);
    }
}

// Groups a diagram set by label (labels sorted) and checks test viability.
tda::Labeling labeling_from_set(const tda::DiagramSet& set,
                                std::map<std::string, int>* group_sizes) {
    std::map<std::string, std::vector<int>> by_label;
    for (std::size_t i = 0; i < set.labels.size(); ++i) {
        by_label[set.labels[i]].push_back(static_cast<int>(i));
    }
    tda::Labeling labeling;
    for (auto& [label, members] : by_label) {
        if (group_sizes) (*group_sizes)[label] = static_cast<int>(members.size());
        labeling.groups.push_back(std::move(members));
    }
    tda::validate_labeling(labeling, set.diagrams.size());
    return labeling;
}

struct TestCli {
    std::string directory;
    std::int64_t reps = 10000;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    bool add_one = false;
    bool json = false;
    std::string inf = "drop";
};

int run_test_command(const TestCli& args, const CLI::Option* seed_opt) {
    const tda::InfinitePolicy policy = parse_inf_policy(args.inf);
    const tda::DiagramSet set = tda::load_diagram_set(args.directory);

    std::map<std::string, int> group_sizes;
    const tda::Labeling labeling = labeling_from_set(set, &group_sizes);

    const tda::DistanceMatrix distances =
        tda::pairwise_distance_matrix(set.diagrams, policy, env_threads());

    tda::TestResult result;
    std::uint64_t seed = 0;
    if (args.exhaustive) {
        result = tda::exhaustive_test(distances, labeling);
    } else {
        seed = pick_seed(seed_opt, args.seed);
        result = tda::randomization_test(distances, labeling, args.reps, seed,
                                         env_threads());
    }

    const double reported_p =
        args.add_one ? static_cast<double>(result.count + 1) /
                           static_cast<double>(result.replicates + 1)
                     : result.p_value;

    if (args.json) {
        nlohmann::json j;
        j["command"] = "test";
        j["version"] = tda::k_version;
        j["input"] = args.directory;
        j["flags"]["reps"] = args.reps;
        j["flags"]["seed"] = seed;
        j["flags"]["exhaustive"] = args.exhaustive;
        j["flags"]["add_one"] = args.add_one;
        j["flags"]["inf"] = args.inf;
        j["groups"] = group_sizes;
        j["result"]["observed_loss"] = result.observed_loss;
        j["result"]["replicates"] = result.replicates;
        j["result"]["count"] = result.count;
        j["result"]["p_value"] = reported_p;
        j["result"]["seed"] = result.seed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "observed_loss " << tda::format_double(result.observed_loss) << "\n"
                  << "replicates " << result.replicates << "\n"
                  << "count " << result.count << "\n"
                  << "p_value " << tda::format_double(reported_p) << "\n";
        if (!args.exhaustive) std::cout << "seed " << result.seed << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomization tests for persistence diagrams"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tda::k_version));

    // --- dist ---------------------------------------------------------
    auto* dist_cmd = app.add_subcommand("dist", "L2-matching distance between two diagram files");
    std::string dist_a, dist_b, dist_inf = "drop";
    dist_cmd->add_option("fileA", dist_a)->required();
    dist_cmd->add_option("fileB", dist_b)->required();
    dist_cmd->add_option("--inf", dist_inf, "infinite-death policy: drop | truncate=<cap>")->check(inf_policy_validator);

    // --- pairwise -----------------------------------------------------
    auto* pair_cmd = app.add_subcommand("pairwise", "distance matrix of a diagram set");
    std::string pair_dir, pair_out, pair_inf = "drop";
    pair_cmd->add_option("dir", pair_dir, "directory with diagram files and labels.csv")->required();
    pair_cmd->add_option("-o,--output", pair_out, "output csv")->required();
    pair_cmd->add_option("--inf", pair_inf, "infinite-death policy: drop | truncate=<cap>")->check(inf_policy_validator);

    // --- rips ---------------------------------------------------------
    auto* rips_cmd = app.add_subcommand("rips", "Vietoris-Rips persistence of a point cloud");
    std::string rips_points, rips_out;
    int rips_maxdim = 1;
    double rips_maxradius = -1.0;
    rips_cmd->add_option("points", rips_points, "point cloud csv (one point per row)")->required();
    rips_cmd->add_option("--maxdim", rips_maxdim, "highest homology degree")->required();
    auto* rips_radius_opt =
        rips_cmd->add_option("--maxradius", rips_maxradius, "edge cutoff (default: cloud diameter)");
    rips_cmd->add_option("-o,--output", rips_out, "output directory, one diagram file per degree")->required();

    // --- concurrence ----------------------------------------------------
    auto* conc_cmd = app.add_subcommand("concurrence", "concurrence persistence of an activity matrix");
    std::string conc_matrix, conc_out;
    double conc_cutoff = 0.0;
    int conc_maxdim = 1;
    conc_cmd->add_option("matrix", conc_matrix, "activity csv (rows = timepoints)")->required();
    conc_cmd->add_option("--cutoff", conc_cutoff, "dichotomization cutoff (active iff value > cutoff)")->required();
    conc_cmd->add_option("--maxdim", conc_maxdim, "highest homology degree")->required();
    conc_cmd->add_option("-o,--output", conc_out, "output directory")->required();

    // --- pht ------------------------------------------------------------
    auto* pht_cmd = app.add_subcommand("pht", "persistent homology transform of a polygon");
    std::string pht_polygon, pht_out;
    int pht_dirs = 64;
    bool pht_normalize = false;
    pht_cmd->add_option("polygon", pht_polygon, "polygon csv (planar vertices in cycle order)")->required();
    pht_cmd->add_option("--dirs", pht_dirs, "number of directions");
    pht_cmd->add_flag("--normalize", pht_normalize, "centre the centroid and scale the max vertex norm to 1");
    pht_cmd->add_option("-o,--output", pht_out, "output directory, one diagram file per direction")->required();

    // --- test -----------------------------------------------------------
    auto* test_cmd = app.add_subcommand("test", "randomization test of a labeled diagram set");
    TestCli test_args;
    test_cmd->add_option("dir", test_args.directory, "directory with diagram files and labels.csv")->required();
    test_cmd->add_option("--reps", test_args.reps, "number of random relabelings");
    auto* test_seed_opt = test_cmd->add_option("--seed", test_args.seed, "RNG seed (drawn and printed if absent)");
    auto* test_exhaustive_opt =
        test_cmd->add_flag("--exhaustive", test_args.exhaustive, "enumerate all relabelings instead of sampling");
    test_cmd->add_flag("--add-one", test_args.add_one,
                       "report (count+1)/(N+1) instead of count/N")
        ->excludes(test_exhaustive_opt);
    test_cmd->add_flag("--json", test_args.json, "machine-readable output");
    test_cmd->add_option("--inf", test_args.inf, "infinite-death policy: drop | truncate=<cap>")->check(inf_policy_validator);

    // --- simulate ---------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "regenerate a p-value sweep");
    std::string sim_preset, sim_out;
    double sim_scale = 0.2;
    std::uint64_t sim_seed = 0;
    sim_cmd->add_option("--preset", sim_preset, "fig3|fig4|fig5|fig6|fig7")
        ->required()
        ->check(CLI::IsMember(tda::sweep_preset_names()));
    sim_cmd->add_option("--scale", sim_scale, "fraction of the full sweep (1 = full grid)");
    auto* sim_seed_opt = sim_cmd->add_option("--seed", sim_seed, "RNG seed (drawn and printed if absent)");
    sim_cmd->add_option("-o,--output", sim_out, "output csv (param,run,p_value)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dist_cmd->parsed()) {
            const auto x = tda::read_diagram_file(dist_a);
            const auto y = tda::read_diagram_file(dist_b);
            std::cout << tda::format_double(
                             tda::diagram_distance(x, y, parse_inf_policy(dist_inf)))
                      << "\n";
        } else if (pair_cmd->parsed()) {
            const tda::DiagramSet set = tda::load_diagram_set(pair_dir);
            const tda::DistanceMatrix distances = tda::pairwise_distance_matrix(
                set.diagrams, parse_inf_policy(pair_inf), env_threads());
            tda::write_distance_matrix_csv(pair_out, set.names, distances);
        } else if (rips_cmd->parsed()) {
            const tda::PointCloud cloud = tda::read_point_cloud_csv(rips_points);
            std::optional<double> radius;
            if (rips_radius_opt->count() > 0) radius = rips_maxradius;
            const auto complex = tda::rips_filtration(cloud, rips_maxdim + 1, radius);
            write_diagrams_per_degree(tda::compute_persistence(complex, rips_maxdim),
                                      rips_out);
        } else if (conc_cmd->parsed()) {
            const tda::RealMatrix data = tda::read_matrix_csv(conc_matrix);
            const tda::BinaryMatrix activity = tda::dichotomize(data, conc_cutoff);
            const auto complex = tda::concurrence_filtration(activity, conc_maxdim + 1);
            write_diagrams_per_degree(tda::compute_persistence(complex, conc_maxdim),
                                      conc_out);
        } else if (pht_cmd->parsed()) {
            const tda::Polygon polygon = tda::read_polygon_csv(pht_polygon);
            const tda::PhtRepresentation rep =
                tda::pht(polygon, pht_dirs, pht_normalize, env_threads());
            fs::create_directories(pht_out);
            for (std::size_t k = 0; k < rep.diagrams.size(); ++k) {
                char name[32];
                std::snprintf(name, sizeof(name), "dir%03zu.dgm", k);
                tda::write_diagram_file(rep.diagrams[k], fs::path(pht_out) / name);
            }
        } else if (test_cmd->parsed()) {
            return run_test_command(test_args, test_seed_opt);
        } else if (sim_cmd->parsed()) {
            const std::uint64_t seed = pick_seed(sim_seed_opt, sim_seed);
            const tda::SweepConfig config = tda::sweep_preset(sim_preset, sim_scale, seed);
            tda::write_sweep_csv(sim_out, tda::run_sweep(config, env_threads()));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
