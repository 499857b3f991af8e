#include "tda/simplicial.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tda {
namespace {

std::string simplex_to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.vertices[i]);
    }
    out += "}";
    return out;
}

struct VertexListHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

void validate_point_cloud(const PointCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("point cloud is empty");
    const std::size_t d = cloud.points.front().size();
    if (d < 1) throw std::invalid_argument("point dimension must be >= 1");
    for (const auto& p : cloud.points) {
        if (p.size() != d)
            throw std::invalid_argument("points have inconsistent dimensions");
        for (double c : p) {
            if (std::isnan(c)) throw std::invalid_argument("NaN coordinate in point cloud");
        }
    }
}

void validate_polygon(const Polygon& polygon) {
    const std::size_t n = polygon.vertices.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = polygon.vertices[i];
        const auto& b = polygon.vertices[(i + 1) % n];
        if (std::isnan(a[0]) || std::isnan(a[1]))
            throw std::invalid_argument("NaN coordinate in polygon");
        if (a == b)
            throw std::invalid_argument("consecutive polygon vertices coincide at index " +
                                        std::to_string(i));
    }
}

void validate_complex(const FilteredComplex& complex) {
    std::unordered_map<std::vector<int>, double, VertexListHash> value_of;
    value_of.reserve(complex.simplices.size());

    for (const auto& s : complex.simplices) {
        if (s.vertices.empty()) throw std::invalid_argument("empty simplex");
        for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
            if (s.vertices[i] >= s.vertices[i + 1])
                throw std::invalid_argument("simplex vertices not strictly increasing: " +
                                            simplex_to_string(s));
        }
        if (!std::isfinite(s.value))
            throw std::invalid_argument("non-finite filtration value on " +
                                        simplex_to_string(s));
        if (!value_of.emplace(s.vertices, s.value).second)
            throw std::invalid_argument("duplicate simplex " + simplex_to_string(s));
    }

    for (const auto& s : complex.simplices) {
        if (s.dim() == 0) continue;
        std::vector<int> face(s.vertices.size() - 1);
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < s.vertices.size(); ++i) {
                if (i != drop) face[k++] = s.vertices[i];
            }
            const auto it = value_of.find(face);
            if (it == value_of.end())
                throw std::invalid_argument("complex not closed under faces: missing face of " +
                                            simplex_to_string(s));
            if (it->second > s.value)
                throw std::invalid_argument("non-monotone filtration at " +
                                            simplex_to_string(s));
        }
    }
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace tda
