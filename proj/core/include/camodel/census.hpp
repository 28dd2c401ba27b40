#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camodel/automaton.hpp"

namespace camodel {

// Shape of a state under the mirror/half decompositions: a state equal to a
// repeated palindrome is doubly symmetric; equal to its own reversal only,
// palindromic; equal to a repeated half only, repetitive.
enum class StateClass { zero, doubly_symmetric, palindromic, repetitive, generic };

const char* to_string(StateClass c);
StateClass classify_state(const CaState& s);

struct CycleSummary {
    std::uint64_t cycle_length = 0;
    StateClass state_class = StateClass::generic;  // dominant class on the cycles
    CaState representative;                        // smallest state of the group
    std::uint64_t count_of_cycles = 0;
    std::uint64_t total_states = 0;                // cycle_length * count_of_cycles
};

// Partitions all 2^len states into cycles of the (invertible) transition
// map and groups them by (cycle length, dominant state class). Rows come
// out sorted by cycle length, then class. jobs > 1 splits the walk across
// threads without changing the result.
std::vector<CycleSummary> enumerate_cycles(const RuleVector& d, int jobs = 1, int max_cells = 24);

}  // namespace camodel
