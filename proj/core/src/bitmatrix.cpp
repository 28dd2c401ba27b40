#include "camodel/bitmatrix.hpp"

#include <string>

namespace camodel {

std::vector<std::uint8_t> solve_linear(const BitMatrix& m, const std::vector<std::uint8_t>& rhs) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rhs.size() != rows)
        throw std::invalid_argument("right-hand side length does not match row count");

    const std::size_t wpr = m.words_per_row();
    std::vector<std::uint64_t> a(rows * wpr);
    std::vector<std::uint8_t> b(rhs);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t w = 0; w < wpr; ++w) a[r * wpr + w] = m.row(r)[w];

    auto get = [&](std::size_t r, std::size_t c) -> bool {
        return (a[r * wpr + c / 64] >> (c % 64)) & 1u;
    };
    auto xor_rows = [&](std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < wpr; ++w) a[dst * wpr + w] ^= a[src * wpr + w];
        b[dst] ^= b[src];
    };

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !get(pivot, c)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t w = 0; w < wpr; ++w) std::swap(a[pivot * wpr + w], a[rank * wpr + w]);
            std::swap(b[pivot], b[rank]);
        }
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && get(r, c)) xor_rows(r, rank);
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (b[r])
            throw inconsistent_system("linear system is inconsistent (rank " + std::to_string(rank) +
                                      " of " + std::to_string(rows) + " equations)");
    }

    std::vector<std::uint8_t> x(cols, 0);
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace camodel
