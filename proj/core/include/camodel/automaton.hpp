#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "camodel/bitseq.hpp"
#include "camodel/poly.hpp"

namespace camodel {

// One-dimensional binary 90/150 hybrid automaton with null boundary. Cells
// are numbered 1..len; entry k-1 of the backing vector is cell k. In the
// hex codec ("8C031@20") and the packed word, cell 1 is the most
// significant bit, so numeric order on packed states is lexicographic order
// on cell strings.

class RuleVector {
public:
    explicit RuleVector(std::vector<std::uint8_t> rules);
    // binary ("10001"), hex with bit length ("8C031@20"),
    // or rule words ("150 90 90")
    static RuleVector parse(std::string_view text);

    int size() const { return static_cast<int>(rules_.size()); }
    std::uint8_t operator[](int idx0) const { return rules_[static_cast<std::size_t>(idx0)]; }
    const std::vector<std::uint8_t>& bits() const { return rules_; }

    RuleVector reversed() const;
    std::uint64_t packed_msb() const;  // cell 1 at the top bit; size <= 64

    std::string to_binary_string() const;
    std::string to_hex_string() const;
    std::string to_word_string() const;

    bool operator==(const RuleVector&) const = default;

private:
    std::vector<std::uint8_t> rules_;
};

class CaState {
public:
    explicit CaState(std::vector<std::uint8_t> cells);
    static CaState zero(int len);
    static CaState parse(std::string_view text);  // binary or hex@len
    static CaState from_packed_msb(std::uint64_t value, int len);

    int size() const { return static_cast<int>(cells_.size()); }
    std::uint8_t operator[](int idx0) const { return cells_[static_cast<std::size_t>(idx0)]; }
    const std::vector<std::uint8_t>& cells() const { return cells_; }
    bool is_zero() const;
    int weight() const;

    std::uint64_t packed_msb() const;
    std::string to_binary_string() const;
    std::string to_hex_string() const;

    bool operator==(const CaState&) const = default;

private:
    std::vector<std::uint8_t> cells_;
};

// One synchronous update. Cell k reads neighbors k-1 and k+1 (0 beyond the
// ends) and itself when its rule is 150.
CaState ca_step(const RuleVector& d, const CaState& s);

// Vertical sequence read at `cell` (1-based) for n steps, starting with the
// initial state at time 0.
BitSeq cell_sequence(const RuleVector& d, const CaState& s0, int cell, std::size_t n);

// Characteristic polynomial of the transition map via the tridiagonal
// recurrence D_k = (X + d_k) D_{k-1} + D_{k-2}, D_{-1} = 0, D_0 = 1.
Poly ca_char_poly(const RuleVector& d);

// Packed single-word step for automata of at most 64 cells; cell 1 at bit
// len-1. rule_mask marks the 150-cells the same way.
inline std::uint64_t ca_step_packed(std::uint64_t s, std::uint64_t rule_mask, int len) {
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    return ((s << 1) ^ (s >> 1) ^ (s & rule_mask)) & mask;
}

}  // namespace camodel
