#pragma once

#include <cstdint>
#include <utility>

#include "camodel/automaton.hpp"
#include "camodel/poly.hpp"

namespace camodel {

// Doubling step: append the reversal after complementing the central pair,
// (d_1..d_{L-1}, ~d_L, ~d_L, d_{L-1}..d_1). The characteristic polynomial of
// the result is the square of the input's.
RuleVector concat_double(const RuleVector& d);

// Finds the reversal pair of 90/150 rule vectors whose characteristic
// polynomial is the given irreducible q, by exhaustive search over the
// recurrence tree; the first element is the lexicographically smaller
// vector. Results are re-verified through ca_char_poly before returning.
std::pair<RuleVector, RuleVector> synthesize_ca(const Poly& q, int max_degree = 20);

// Automata of length 2^ceil(log2 p) * deg(basic) whose characteristic
// polynomial is basic^(2^ceil(log2 p)): the synthesized pair, each doubled
// until p sequences interleave.
std::pair<RuleVector, RuleVector> build_mpca(const Poly& basic, std::uint64_t p, int max_degree = 20);

}  // namespace camodel
