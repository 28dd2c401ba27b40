#include "camodel/synthesis.hpp"

#include <bit>
#include <stdexcept>

namespace camodel {

RuleVector concat_double(const RuleVector& d) {
    const int len = d.size();
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(2 * len));
    for (int i = 0; i + 1 < len; ++i) out.push_back(d[i]);
    const std::uint8_t flipped = d[len - 1] ? 0 : 1;
    out.push_back(flipped);
    out.push_back(flipped);
    for (int i = len - 2; i >= 0; --i) out.push_back(d[i]);
    return RuleVector(std::move(out));
}

namespace {

// Depth-first search over rule prefixes, carrying the last two recurrence
// polynomials packed into words (degree <= 63 here). Trying 0 before 1
// yields the lexicographically smallest solution first.
bool search_rules(int depth, int target_len, std::uint64_t target_bits,
                  std::uint64_t prev2, std::uint64_t prev1,
                  std::vector<std::uint8_t>& rules) {
    if (depth == target_len) return prev1 == target_bits;
    for (std::uint8_t choice = 0; choice <= 1; ++choice) {
        const std::uint64_t cur = (prev1 << 1) ^ (choice ? prev1 : 0) ^ prev2;
        rules.push_back(choice);
        if (search_rules(depth + 1, target_len, target_bits, prev1, cur, rules)) return true;
        rules.pop_back();
    }
    return false;
}

}  // namespace

std::pair<RuleVector, RuleVector> synthesize_ca(const Poly& q, int max_degree) {
    if (q.is_zero() || q.degree() < 1)
        throw std::invalid_argument("synthesis needs a polynomial of degree >= 1");
    if (!is_irreducible(q))
        throw std::invalid_argument("synthesis needs an irreducible polynomial");
    const int len = q.degree();
    if (len > max_degree || len > 63)
        throw std::domain_error("synthesis search capped at degree " + std::to_string(max_degree));

    std::vector<std::uint8_t> rules;
    rules.reserve(static_cast<std::size_t>(len));
    if (!search_rules(0, len, q.coeff_bits(), 0, 1, rules))
        throw std::runtime_error("synthesis search failed for " + to_exp_string(q));

    RuleVector first(std::move(rules));
    RuleVector second = first.reversed();
    if (ca_char_poly(first) != q || ca_char_poly(second) != q)
        throw std::logic_error("synthesis result failed verification");
    // the search returns the lexicographically smallest solution, and the
    // reversal is a solution too, so the pair is already ordered
    return {first, second};
}

std::pair<RuleVector, RuleVector> build_mpca(const Poly& basic, std::uint64_t p, int max_degree) {
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    auto [a, b] = synthesize_ca(basic, max_degree);
    const int doublings = p == 1 ? 0 : std::bit_width(p - 1);
    for (int i = 0; i < doublings; ++i) {
        a = concat_double(a);
        b = concat_double(b);
    }
    return {a, b};
}

}  // namespace camodel
