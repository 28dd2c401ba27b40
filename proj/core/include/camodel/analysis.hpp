#pragma once

#include <cstdint>

#include "camodel/bitseq.hpp"
#include "camodel/poly.hpp"

namespace camodel {

struct BmResult {
    int lc = 0;          // linear complexity
    Poly charpoly;       // monic, degree lc; X^lc + sum c_i X^(lc-i)
};

// Berlekamp-Massey over GF(2). The returned polynomial is in characteristic
// form (the recurrence reads along increasing indices), i.e. the reciprocal
// of the usual connection polynomial. All-zero input yields (0, 1).
BmResult berlekamp_massey(const BitSeq& s);

// True iff sum_j q_j * s_{n+j} == 0 for every window position n.
// Requires q != 0 and s longer than deg q.
bool satisfies_recurrence(const BitSeq& s, const Poly& q);

// Smallest divisor T of `bound` with s_{n+T} == s_n over the whole observed
// window. Requires at least 2*bound bits; throws if no divisor works.
std::uint64_t min_period(const BitSeq& s, std::uint64_t bound);

// C(n, i) mod 2 via bitwise containment (Lucas).
bool binom_mod2(std::uint64_t n, std::uint64_t i);

// Period of n -> C(n, i) mod 2: 1 for i = 0, otherwise the smallest power
// of two strictly greater than i.
std::uint64_t binom_period(std::uint64_t i);

}  // namespace camodel
