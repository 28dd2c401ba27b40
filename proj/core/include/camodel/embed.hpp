#pragma once

#include "camodel/automaton.hpp"
#include "camodel/bitmatrix.hpp"
#include "camodel/bitseq.hpp"

namespace camodel {

// Finds an initial state whose vertical sequence at `cell` (1-based)
// reproduces the whole prefix, by solving the readout system of successive
// linear steps. Throws inconsistent_system when the prefix is not
// producible at that cell. The prefix must be at least as long as the
// automaton.
CaState embed_sequence(const RuleVector& d, const BitSeq& prefix, int cell = 1);

}  // namespace camodel
