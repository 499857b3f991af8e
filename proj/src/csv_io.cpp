#include "tda/csv_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
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

} // namespace

RealMatrix read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv file: " + path.string());

    RealMatrix matrix;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            const std::string cell = trim(line.substr(start, comma - start));
            char* end = nullptr;
            const double value = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size()) {
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": bad numeric cell '" + cell + "'");
            }
            row.push_back(value);
            start = comma + 1;
        }

        if (matrix.rows == 0) {
            matrix.cols = row.size();
        } else if (row.size() != matrix.cols) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected " + std::to_string(matrix.cols) +
                                     " columns, got " + std::to_string(row.size()));
        }
        matrix.data.insert(matrix.data.end(), row.begin(), row.end());
        ++matrix.rows;
    }
    if (matrix.rows == 0)
        throw std::runtime_error("csv file has no data rows: " + path.string());
    return matrix;
}

PointCloud read_point_cloud_csv(const std::filesystem::path& path) {
    const RealMatrix matrix = read_matrix_csv(path);
    PointCloud cloud;
    cloud.points.reserve(matrix.rows);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        std::vector<double> point(matrix.cols);
        for (std::size_t c = 0; c < matrix.cols; ++c) point[c] = matrix.at(r, c);
        cloud.points.push_back(std::move(point));
    }
    validate_point_cloud(cloud);
    return cloud;
}

Polygon read_polygon_csv(const std::filesystem::path& path) {
    const RealMatrix matrix = read_matrix_csv(path);
    if (matrix.cols != 2)
        throw std::runtime_error("polygon csv must have exactly 2 columns: " +
                                 path.string());
    Polygon polygon;
    polygon.vertices.reserve(matrix.rows);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        polygon.vertices.push_back({matrix.at(r, 0), matrix.at(r, 1)});
    }
    validate_polygon(polygon);
    return polygon;
}

void write_distance_matrix_csv(const std::filesystem::path& path,
                               const std::vector<std::string>& names,
                               const DistanceMatrix& distances) {
    if (names.size() != distances.n)
        throw std::invalid_argument("name count does not match matrix size");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv file: " + path.string());

    for (const auto& name : names) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < distances.n; ++i) {
        out << names[i];
        for (std::size_t j = 0; j < distances.n; ++j) {
            out << "," << format_double(distances.at(i, j));
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv file: " + path.string());
    out << "param,run,p_value\n";
    for (const auto& row : rows) {
        out << format_double(row.param) << "," << row.run << ","
            << format_double(row.p_value) << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace tda
