#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tda {

struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // row-major

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

struct BinaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data; // row-major, entries 0/1

    std::uint8_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::uint8_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

} // namespace tda
