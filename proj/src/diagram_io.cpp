#include "tda/diagram_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tda/format.hpp"

namespace tda {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

// strtod with a full-token-consumed requirement; accepts "inf".
bool parse_double(const std::string& tok, double& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    return end == tok.c_str() + tok.size();
}

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line_no,
                          const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " +
                             what);
}

} // namespace

PersistenceDiagram read_diagram_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open diagram file: " + path.string());

    int hom_dim = 0;
    bool saw_header = false;
    bool saw_point = false;
    std::vector<PersistencePoint> points;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '#') {
            const auto toks = split_ws(line.substr(1));
            if (toks.empty() || toks[0] != "dim") continue; // plain comment
            if (saw_point) fail_at(path, line_no, "dim header after points");
            if (saw_header) fail_at(path, line_no, "duplicate dim header");
            if (toks.size() != 2) fail_at(path, line_no, "malformed dim header");
            try {
                std::size_t used = 0;
                const int k = std::stoi(toks[1], &used);
                if (used != toks[1].size() || k < 0)
                    fail_at(path, line_no, "bad homology dimension '" + toks[1] + "'");
                hom_dim = k;
            } catch (const std::runtime_error&) {
                throw;
            } catch (const std::exception&) {
                fail_at(path, line_no, "bad homology dimension '" + toks[1] + "'");
            }
            saw_header = true;
            continue;
        }

        const auto toks = split_ws(line);
        if (toks.size() != 2) fail_at(path, line_no, "expected '<birth> <death>'");
        double birth = 0.0, death = 0.0;
        if (!parse_double(toks[0], birth)) fail_at(path, line_no, "bad birth value");
        if (!parse_double(toks[1], death)) fail_at(path, line_no, "bad death value");
        if (std::isnan(birth) || std::isnan(death))
            fail_at(path, line_no, "NaN coordinate");
        if (std::isinf(birth)) fail_at(path, line_no, "birth must be finite");
        if (birth > death) fail_at(path, line_no, "birth exceeds death");
        points.push_back({birth, death});
        saw_point = true;
    }

    return make_diagram(std::move(points), hom_dim);
}

void write_diagram_file(const PersistenceDiagram& diagram,
                        const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write diagram file: " + path.string());
    out << "# dim " << diagram.hom_dim() << "\n";
    for (const auto& p : diagram.points()) {
        out << format_double(p.birth) << " " << format_double(p.death) << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

DiagramSet load_diagram_set(const std::filesystem::path& directory) {
    const auto manifest = directory / "labels.csv";
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest.string());

    DiagramSet set;
    std::set<std::string> seen;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            fail_at(manifest, line_no, "expected '<filename>,<group-label>'");
        const std::string name = trim(line.substr(0, comma));
        const std::string label = trim(line.substr(comma + 1));
        if (name.empty()) fail_at(manifest, line_no, "empty filename");
        if (label.empty()) fail_at(manifest, line_no, "empty group label");
        if (!seen.insert(name).second)
            fail_at(manifest, line_no, "duplicate filename '" + name + "'");
        set.names.push_back(name);
        set.labels.push_back(label);
        set.diagrams.push_back(read_diagram_file(directory / name));
    }
    if (set.names.empty())
        throw std::runtime_error("manifest lists no diagrams: " + manifest.string());
    return set;
}

} // namespace tda
