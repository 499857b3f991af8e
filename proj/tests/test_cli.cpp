// End-to-end checks of the tda-nhst binary (path injected by CMake).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tda/diagram_io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "tda_nhst_test_cli";

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    fs::create_directories(kWork);
    const fs::path out = kWork / "stdout.txt";
    const fs::path err = kWork / "stderr.txt";
    const std::string command = std::string(TDA_NHST_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2> " + err.string();
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << text;
}

// Two groups of slightly different diagram sets, enough for a test run.
fs::path make_test_set() {
    const fs::path dir = kWork / "set";
    fs::create_directories(dir);
    std::string manifest;
    for (int i = 0; i < 3; ++i) {
        const std::string name_a = "a" + std::to_string(i) + ".dgm";
        const std::string name_b = "b" + std::to_string(i) + ".dgm";
        write_text(dir / name_a,
                   "0 1.0\n0.1 " + std::to_string(1.0 + 0.01 * i) + "\n");
        write_text(dir / name_b,
                   "0 2.0\n0.1 " + std::to_string(2.0 + 0.01 * i) + "\n");
        manifest += name_a + ",left\n" + name_b + ",right\n";
    }
    write_text(dir / "labels.csv", manifest);
    return dir;
}

} // namespace

TEST_CASE("dist: self distance prints 0 and exits 0") {
    const fs::path file = kWork / "self.dgm";
    write_text(file, "# dim 1\n0 2\n1 3\n");
    const auto r = run_cli("dist " + file.string() + " " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("dist: known value") {
    const fs::path a = kWork / "one.dgm";
    const fs::path b = kWork / "none.dgm";
    write_text(a, "0 2\n");
    write_text(b, "# dim 0\n");
    const auto r = run_cli("dist " + a.string() + " " + b.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.4142135623730951\n"); // sqrt(2)
}

TEST_CASE("usage errors exit 1") {
    const fs::path file = kWork / "self.dgm";
    write_text(file, "0 2\n");
    CHECK(run_cli("dist " + file.string()).exit_code == 1); // missing argument
    CHECK(run_cli("frobnicate").exit_code == 1);            // unknown subcommand
    CHECK(run_cli("").exit_code == 1);                      // missing subcommand
    CHECK(run_cli("dist " + file.string() + " " + file.string() + " --inf sometimes")
              .exit_code == 1);
}

TEST_CASE("data errors exit 2") {
    const fs::path bad = kWork / "bad.dgm";
    write_text(bad, "2.0 1.0\n");
    const fs::path good = kWork / "good.dgm";
    write_text(good, "0 1\n");
    const auto r = run_cli("dist " + bad.string() + " " + good.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(run_cli("dist missing.dgm missing.dgm").exit_code == 2);
}

TEST_CASE("test: repeated runs are byte-identical") {
    const fs::path dir = make_test_set();
    const auto r1 = run_cli("test " + dir.string() + " --reps 500 --seed 7 --json");
    const auto r2 = run_cli("test " + dir.string() + " --reps 500 --seed 7 --json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\"p_value\"") != std::string::npos);
    CHECK(r1.out.find("\"observed_loss\"") != std::string::npos);
    CHECK(r1.out.find("\"seed\": 7") != std::string::npos);

    const auto plain = run_cli("test " + dir.string() + " --reps 500 --seed 7");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("observed_loss ") != std::string::npos);
    CHECK(plain.out.find("count ") != std::string::npos);
}

TEST_CASE("test: missing seed is drawn and reported") {
    const fs::path dir = make_test_set();
    const auto r = run_cli("test " + dir.string() + " --reps 200");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("using seed") != std::string::npos);
}

TEST_CASE("test: exhaustive mode") {
    const fs::path dir = make_test_set();
    const auto r = run_cli("test " + dir.string() + " --exhaustive --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"replicates\": 20") != std::string::npos); // C(6,3)
    CHECK(run_cli("test " + dir.string() + " --exhaustive --add-one").exit_code == 1);
}

TEST_CASE("rips writes one diagram per degree") {
    const fs::path points = kWork / "square.csv";
    write_text(points, "0,0\n1,0\n1,1\n0,1\n");
    const fs::path out = kWork / "rips_out";
    fs::remove_all(out);
    const auto r = run_cli("rips " + points.string() + " --maxdim 1 -o " + out.string());
    CHECK(r.exit_code == 0);
    const auto h0 = tda::read_diagram_file(out / "h0.dgm");
    const auto h1 = tda::read_diagram_file(out / "h1.dgm");
    CHECK(h0.hom_dim() == 0);
    CHECK(h0.size() == 4); // 3 merges + 1 essential
    CHECK(h1.size() == 1);
}

TEST_CASE("pairwise writes a labeled csv") {
    const fs::path dir = make_test_set();
    const fs::path out = kWork / "pairwise.csv";
    const auto r = run_cli("pairwise " + dir.string() + " -o " + out.string());
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find(",a0.dgm,b0.dgm") != std::string::npos);
    CHECK(csv.find("a0.dgm,0,") != std::string::npos);
}

TEST_CASE("concurrence end to end") {
    const fs::path matrix = kWork / "activity.csv";
    write_text(matrix, "1,1,0\n1,0,1\n0.4,0.9,0.2\n1,1,1\n");
    const fs::path out = kWork / "conc_out";
    fs::remove_all(out);
    const auto r = run_cli("concurrence " + matrix.string() +
                           " --cutoff 0.5 --maxdim 1 -o " + out.string());
    CHECK(r.exit_code == 0);
    const auto h0 = tda::read_diagram_file(out / "h0.dgm");
    CHECK(h0.hom_dim() == 0);
    CHECK(h0.size() >= 1);
    CHECK(fs::exists(out / "h1.dgm"));
}

TEST_CASE("pht writes one diagram per direction") {
    const fs::path polygon = kWork / "poly.csv";
    write_text(polygon, "1,0\n0,1\n-1,0\n0,-1\n");
    const fs::path out = kWork / "pht_out";
    fs::remove_all(out);
    const auto r = run_cli("pht " + polygon.string() + " --dirs 8 --normalize -o " +
                           out.string());
    CHECK(r.exit_code == 0);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(out)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 8);
    CHECK(tda::read_diagram_file(out / "dir000.dgm").hom_dim() == 0);
}

TEST_CASE("simulate: deterministic csv with the documented columns") {
    const fs::path out1 = kWork / "sim1.csv";
    const fs::path out2 = kWork / "sim2.csv";
    const std::string args = "simulate --preset fig7 --scale 0.02 --seed 5 -o ";
    CHECK(run_cli(args + out1.string()).exit_code == 0);
    CHECK(run_cli(args + out2.string()).exit_code == 0);
    const std::string csv = slurp(out1);
    CHECK(csv.rfind("param,run,p_value\n", 0) == 0);
    CHECK(csv == slurp(out2));
    CHECK(run_cli("simulate --preset fig9 -o " + out1.string()).exit_code == 1);
}
