#include "tda/concurrence.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tda {
namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& bits) {
    std::size_t total = 0;
    for (std::uint64_t w : bits) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

Bits bits_and(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

} // namespace

BinaryMatrix dichotomize(const RealMatrix& data, double cutoff) {
    BinaryMatrix out;
    out.rows = data.rows;
    out.cols = data.cols;
    out.data.resize(data.data.size());
    for (std::size_t i = 0; i < data.data.size(); ++i) {
        out.data[i] = data.data[i] > cutoff ? 1 : 0;
    }
    return out;
}

FilteredComplex concurrence_filtration(const BinaryMatrix& activity, int max_dim,
                                       std::size_t max_simplices) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
    for (const std::uint8_t e : activity.data) {
        if (e > 1) throw std::invalid_argument("activity entries must be 0 or 1");
    }

    const std::size_t n_vars = activity.cols;
    const std::size_t words = (activity.rows + 63) / 64;

    // One bitset per variable: which timepoints it is active at.
    std::vector<Bits> column_bits(n_vars, Bits(words, 0));
    for (std::size_t t = 0; t < activity.rows; ++t) {
        for (std::size_t v = 0; v < n_vars; ++v) {
            if (activity.at(t, v)) column_bits[v][t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }

    FilteredComplex complex;
    auto add_simplex = [&](const std::vector<int>& vertices, std::size_t count) {
        if (complex.simplices.size() >= max_simplices) {
            throw std::runtime_error(
                "concurrence complex too large (over " + std::to_string(max_simplices) +
                " simplices); lower max_dim or raise the budget");
        }
        complex.simplices.push_back({vertices, -static_cast<double>(count)});
    };

    struct Frontier {
        std::vector<int> vertices;
        Bits active;
    };

    // Level-wise growth; c is antitone in S, so once a subset hits zero no
    // superset can come back.
    std::vector<Frontier> frontier;
    for (std::size_t v = 0; v < n_vars; ++v) {
        const std::size_t c = popcount(column_bits[v]);
        if (c == 0) continue;
        const std::vector<int> verts{static_cast<int>(v)};
        add_simplex(verts, c);
        frontier.push_back({verts, column_bits[v]});
    }

    for (int dim = 1; dim <= max_dim && !frontier.empty(); ++dim) {
        std::vector<Frontier> next;
        for (const Frontier& f : frontier) {
            for (std::size_t w = static_cast<std::size_t>(f.vertices.back()) + 1;
                 w < n_vars; ++w) {
                Bits joint = bits_and(f.active, column_bits[w]);
                const std::size_t c = popcount(joint);
                if (c == 0) continue;
                std::vector<int> verts = f.vertices;
                verts.push_back(static_cast<int>(w));
                add_simplex(verts, c);
                next.push_back({std::move(verts), std::move(joint)});
            }
        }
        frontier = std::move(next);
    }
    return complex;
}

} // namespace tda
