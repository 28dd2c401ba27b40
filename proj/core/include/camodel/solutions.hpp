#pragma once

#include <cstdint>
#include <vector>

#include "camodel/analysis.hpp"
#include "camodel/bitseq.hpp"
#include "camodel/field.hpp"

namespace camodel {

// Coefficients A_0..A_{p-1} of the closed-form solution of the order-p*L
// recurrence whose characteristic polynomial is modulus^p: term i is the
// binomial-weighted trace stream n -> C(n,i) * trace(A_i * alpha^n).
struct SolutionCoeffs {
    Field field;
    std::vector<Field::Elem> coeffs;
};

bool solution_eval(const SolutionCoeffs& c, std::uint64_t n);
BitSeq solution_stream(const SolutionCoeffs& c, std::size_t n);

// Period of a solution from the set of nonzero coefficients: the largest
// binomial period among the flagged indices times 2^degree - 1.
std::uint64_t predict_period(const std::vector<bool>& nonzero, int degree);

// Linear complexity: (highest flagged index + 1) * degree.
std::uint64_t predict_lc(const std::vector<bool>& nonzero, int degree);

// Number of distinct sequences per coefficient class i (highest nonzero
// index), N_i = 2^(i*degree) / binom_period(i), and their sum.
struct SequenceCountPrediction {
    std::vector<std::uint64_t> per_class;
    std::uint64_t total = 0;
};

SequenceCountPrediction predict_counts(int degree, int p);

}  // namespace camodel
