#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace camodel {

struct inconsistent_system : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense binary matrix with bit-packed rows.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (v) w |= mask;
        else w &= ~mask;
    }

    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_per_row_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_per_row_; }
    std::size_t words_per_row() const { return words_per_row_; }

private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> data_;
};

// Solves m * x = rhs over GF(2) by bit-packed Gaussian elimination.
// Free variables are set to 0. Throws inconsistent_system when no solution
// exists; a consistent but rank-deficient system still yields a solution.
std::vector<std::uint8_t> solve_linear(const BitMatrix& m, const std::vector<std::uint8_t>& rhs);

}  // namespace camodel
