#include "tda/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tda {
namespace {

constexpr int kNone = -1;

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

// Symmetric difference of two sorted index lists (Z/2 column addition).
std::vector<int> xor_columns(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

std::vector<PersistenceDiagram> compute_persistence(const FilteredComplex& complex,
                                                    int max_hom_dim) {
    if (max_hom_dim < 0) throw std::invalid_argument("max_hom_dim must be >= 0");
    validate_complex(complex);

    const std::size_t count = complex.simplices.size();

    // Filtration order: (value, dimension, insertion index).
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Simplex& sa = complex.simplices[a];
        const Simplex& sb = complex.simplices[b];
        if (sa.value != sb.value) return sa.value < sb.value;
        if (sa.dim() != sb.dim()) return sa.dim() < sb.dim();
        return a < b;
    });

    std::unordered_map<std::vector<int>, int, VertexListHash> position_of;
    position_of.reserve(count);
    for (std::size_t pos = 0; pos < count; ++pos) {
        position_of.emplace(complex.simplices[order[pos]].vertices,
                            static_cast<int>(pos));
    }

    // Boundary columns in filtration order.
    std::vector<std::vector<int>> columns(count);
    for (std::size_t pos = 0; pos < count; ++pos) {
        const Simplex& s = complex.simplices[order[pos]];
        if (s.dim() == 0) continue;
        std::vector<int>& col = columns[pos];
        col.reserve(s.vertices.size());
        std::vector<int> face(s.vertices.size() - 1);
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < s.vertices.size(); ++i) {
                if (i != drop) face[k++] = s.vertices[i];
            }
            col.push_back(position_of.at(face));
        }
        std::sort(col.begin(), col.end());
    }

    // Left-to-right reduction. pivot_owner[p] = column whose lowest entry is p.
    std::vector<int> pivot_owner(count, kNone);
    std::vector<char> is_creator(count, 0);
    for (std::size_t j = 0; j < count; ++j) {
        std::vector<int>& col = columns[j];
        while (!col.empty()) {
            const int low = col.back();
            const int owner = pivot_owner[low];
            if (owner == kNone) break;
            col = xor_columns(col, columns[owner]);
        }
        if (col.empty()) {
            is_creator[j] = 1;
        } else {
            pivot_owner[col.back()] = static_cast<int>(j);
        }
    }

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<PersistencePoint>> raw(max_hom_dim + 1);
    for (std::size_t pos = 0; pos < count; ++pos) {
        if (!is_creator[pos]) continue;
        const Simplex& s = complex.simplices[order[pos]];
        const int degree = s.dim();
        if (degree > max_hom_dim) continue;
        const int killer = pivot_owner[pos];
        const double death = killer == kNone
                                 ? inf
                                 : complex.simplices[order[static_cast<std::size_t>(killer)]].value;
        raw[degree].push_back({s.value, death});
    }

    std::vector<PersistenceDiagram> diagrams;
    diagrams.reserve(raw.size());
    for (int d = 0; d <= max_hom_dim; ++d) {
        diagrams.push_back(make_diagram(std::move(raw[d]), d));
    }
    return diagrams;
}

PersistenceDiagram zero_dim_persistence(const std::vector<WeightedEdge>& edges,
                                        int n_vertices,
                                        const std::vector<double>& vertex_values) {
    if (n_vertices < 0) throw std::invalid_argument("n_vertices must be >= 0");
    if (vertex_values.size() != static_cast<std::size_t>(n_vertices))
        throw std::invalid_argument("vertex_values size does not match n_vertices");
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n_vertices || e.v < 0 || e.v >= n_vertices || e.u == e.v)
            throw std::invalid_argument("edge endpoints out of range");
        const double endpoint_max = std::max(vertex_values[e.u], vertex_values[e.v]);
        if (e.value < endpoint_max)
            throw std::invalid_argument("edge value below an endpoint value");
    }

    std::vector<std::size_t> edge_order(edges.size());
    std::iota(edge_order.begin(), edge_order.end(), std::size_t{0});
    std::sort(edge_order.begin(), edge_order.end(), [&](std::size_t a, std::size_t b) {
        if (edges[a].value != edges[b].value) return edges[a].value < edges[b].value;
        return a < b;
    });

    std::vector<int> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    // birth[root] is the oldest (smallest, then lowest-id) vertex birth in
    // the component.
    std::vector<std::pair<double, int>> birth(n_vertices);
    for (int v = 0; v < n_vertices; ++v) birth[v] = {vertex_values[v], v};

    auto find_root = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::vector<PersistencePoint> points;
    for (const std::size_t idx : edge_order) {
        const WeightedEdge& e = edges[idx];
        int ru = find_root(e.u);
        int rv = find_root(e.v);
        if (ru == rv) continue; // cycle edge, no degree-0 event
        if (birth[rv] < birth[ru]) std::swap(ru, rv); // ru survives (elder)
        points.push_back({birth[rv].first, e.value});
        parent[rv] = ru;
    }
    for (int v = 0; v < n_vertices; ++v) {
        if (find_root(v) == v) {
            points.push_back({birth[v].first, std::numeric_limits<double>::infinity()});
        }
    }
    return make_diagram(std::move(points), 0);
}

} // namespace tda
