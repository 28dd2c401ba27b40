#pragma once

#include <cstdint>
#include <vector>

#include "camodel/bitseq.hpp"
#include "camodel/field.hpp"
#include "camodel/poly.hpp"

namespace camodel {

// Linear feedback shift register. Stage 1 is output, stages shift down,
// stage L receives the feedback defined by the characteristic polynomial
// X^L + sum c_i X^(L-i): new stage L = sum_i c_i * stage_(L+1-i).
class Lfsr {
public:
    Lfsr(Poly charpoly, std::vector<std::uint8_t> state);
    static Lfsr with_all_ones(Poly charpoly);

    int length() const { return length_; }
    const Poly& charpoly() const { return charpoly_; }
    const std::vector<std::uint8_t>& state() const { return state_; }
    bool in_zero_state() const;

    bool clock();                 // outputs stage 1 and advances
    BitSeq bits(std::size_t n);   // next n output bits; advances the state

private:
    Poly charpoly_;
    int length_;
    std::vector<std::uint8_t> taps_;   // taps_[i] = c_(i+1)
    std::vector<std::uint8_t> state_;  // state_[0] = stage 1
};

// Evaluates the trace-form solution of the register's recurrence: the n-th
// keystream bit is trace(a * alpha^n) in GF(2^L) for a primitive modulus.
// a = 0 gives the all-zero stream; other values select the phase.
bool pn_trace_eval(const Field& f, Field::Elem a, std::uint64_t n);

// Two maximal-length registers clocked together; the bit of sr2 is emitted
// exactly when the bit of sr1 is 1.
struct ShrinkConfig {
    ShrinkConfig(Lfsr sr1_in, Lfsr sr2_in);
    Lfsr sr1;
    Lfsr sr2;
};

BitSeq shrink(ShrinkConfig& cfg, std::size_t n);

// Clock-controlled variant: per step, sr1 advances once and sr2 advances
// df_base + sum_k 2^k * stage(df_stages[k]) times (stages read from sr1
// before it advances). The bit sr2 produced on its last advance is emitted
// when sr1's output bit is 1, mirroring the plain shrinking rule; with an
// empty stage list and df_base = 1 the generator degenerates to the
// shrinking generator itself.
struct CcsgConfig {
    CcsgConfig(Lfsr sr1_in, Lfsr sr2_in, std::vector<int> df_stages_in, std::uint32_t df_base_in);
    Lfsr sr1;
    Lfsr sr2;
    std::vector<int> df_stages;  // 1-based stage indices into sr1, distinct
    std::uint32_t df_base;       // >= 1
};

BitSeq ccsg_generate(CcsgConfig& cfg, std::size_t n);

}  // namespace camodel
