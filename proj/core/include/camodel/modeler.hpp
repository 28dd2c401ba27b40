#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camodel/automaton.hpp"
#include "camodel/bitseq.hpp"
#include "camodel/field.hpp"
#include "camodel/poly.hpp"
#include "camodel/registers.hpp"
#include "camodel/synthesis.hpp"

namespace camodel {

// Orbit of a residue under doubling mod 2^L - 1.
struct CosetSpec {
    std::uint64_t leader = 0;
    int field_degree = 0;
    std::vector<std::uint64_t> members;  // ascending
};

CosetSpec cyclotomic_coset(std::uint64_t e, int degree);

// Product of (X + alpha^(2^j e)) over the coset of e; the expansion is
// carried out in GF(2^L) and must land in GF(2).
Poly coset_char_poly(const Field& f, std::uint64_t e);

// Closed-form expectations for a shrinking generator with register lengths
// l1 and l2: coset leader 2^l1 - 1, keystream period (2^l2 - 1) * 2^(l1-1),
// linear complexity in (l2*2^(l1-2), l2*2^(l1-1)], multiplicity in
// (2^(l1-2), 2^(l1-1)]. Lower bounds are exclusive.
struct SgPrediction {
    std::uint64_t coset_leader = 0;
    std::uint64_t period = 0;
    std::uint64_t lc_low = 0;
    std::uint64_t lc_high = 0;
    std::uint64_t p_low = 0;
    std::uint64_t p_high = 0;
};

SgPrediction sg_predicted_props(int l1, int l2);

struct SgModel {
    Poly basic;  // irreducible base of the model's characteristic polynomial
    RuleVector ca1{std::vector<std::uint8_t>{0}};  // lexicographically smaller automaton
    RuleVector ca2{std::vector<std::uint8_t>{0}};  // its reversal
    std::uint64_t p = 1;
};

// Builds the automaton pair of length 2^(l1-1) * deg(p2) that linearizes a
// shrinking generator with control length l1 and generator polynomial p2.
SgModel model_shrinking_generator(int l1, const Poly& p2);

struct MeasuredProps {
    std::uint64_t period = 0;
    int lc = 0;
    Poly minimal_poly;
};

struct SgModelReport {
    Poly basic_poly;
    RuleVector ca1{std::vector<std::uint8_t>{0}};
    RuleVector ca2{std::vector<std::uint8_t>{0}};
    std::uint64_t p_used = 0;
    SgPrediction predicted;
    MeasuredProps measured;
    CaState embedding_state{std::vector<std::uint8_t>{0}};
    bool verdict = false;
    std::string diagnostic;  // set when the verdict is false
};

// Runs the generator, measures period / complexity / minimal polynomial,
// embeds the keystream into the automaton and replays a full period. The
// verdict is data: mismatches produce verdict=false with a diagnostic, not
// an exception.
SgModelReport verify_model(ShrinkConfig cfg, const RuleVector& d);

struct CcsgModelReport {
    Poly basic_poly;
    std::uint64_t p_used = 0;
    RuleVector ca1{std::vector<std::uint8_t>{0}};
    RuleVector ca2{std::vector<std::uint8_t>{0}};
    MeasuredProps measured;
    CaState embedding_state{std::vector<std::uint8_t>{0}};
    bool verdict = false;
    std::string diagnostic;
};

// The clock-controlled pipeline has no closed form for the base polynomial:
// it is measured (Berlekamp-Massey, then peeling the minimal polynomial as a
// power of a single irreducible) and the automaton pair is built from the
// measurement. Throws when the minimal polynomial is not such a power.
CcsgModelReport model_ccsg(CcsgConfig cfg);

// Splits m as base^k for an irreducible base; throws std::domain_error with
// the factors found when impossible.
std::pair<Poly, std::uint64_t> extract_irreducible_power(const Poly& m);

// Line-oriented serializations of the verification report.
std::string report_text(const SgModelReport& r);
std::string report_kv(const SgModelReport& r);
std::string report_text(const CcsgModelReport& r);
std::string report_kv(const CcsgModelReport& r);

}  // namespace camodel
