#include "camodel/embed.hpp"

#include <stdexcept>
#include <string>

namespace camodel {

CaState embed_sequence(const RuleVector& d, const BitSeq& prefix, int cell) {
    const int len = d.size();
    if (cell < 1 || cell > len) throw std::invalid_argument("cell index out of range");
    if (prefix.size() < static_cast<std::size_t>(len))
        throw std::invalid_argument("prefix must cover at least one full state width");

    // The transition matrix is symmetric (tridiagonal with unit off-diagonal
    // bands), so the readout row e_cell^T M^n equals M^n e_cell: stepping the
    // unit state yields the observability rows directly.
    const std::size_t rows = prefix.size();
    BitMatrix obs(rows, static_cast<std::size_t>(len));
    std::vector<std::uint8_t> unit(static_cast<std::size_t>(len), 0);
    unit[static_cast<std::size_t>(cell - 1)] = 1;
    CaState probe{std::move(unit)};
    for (std::size_t n = 0; n < rows; ++n) {
        for (int c = 0; c < len; ++c)
            if (probe[c]) obs.set(n, static_cast<std::size_t>(c), true);
        if (n + 1 < rows) probe = ca_step(d, probe);
    }

    std::vector<std::uint8_t> solution;
    try {
        solution = solve_linear(obs, prefix.bits());
    } catch (const inconsistent_system&) {
        throw inconsistent_system("sequence not producible at cell " + std::to_string(cell) +
                                  " of this automaton");
    }
    CaState state{std::move(solution)};
    if (cell_sequence(d, state, cell, prefix.size()) != prefix)
        throw std::logic_error("embedding replay check failed");
    return state;
}

}  // namespace camodel
