#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace camodel {

// Polynomial over GF(2). Bit i of the packed word vector is the coefficient
// of X^i; the vector is kept normalized (no trailing zero words). Addition
// and multiplication are carry-free, so every nonzero polynomial is monic.
//
// The zero polynomial has no degree; degree() returns kZeroDegree, a
// sentinel that compares below every finite degree. It is deliberately not
// -1: degree arithmetic on the zero polynomial is always a bug.
class Poly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;

    static Poly zero() { return Poly{}; }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(int exponent);
    // bit i of `coeff_bits` becomes the coefficient of X^i
    static Poly from_coeff_bits(std::uint64_t coeff_bits);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    int degree() const;
    bool coeff(int i) const;
    void set_coeff(int i, bool value);
    // coefficients 0..63 packed into one word (degree must be <= 63)
    std::uint64_t coeff_bits() const;

    Poly& operator+=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { lhs += rhs; return lhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    // quotient/remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    friend Poly operator%(const Poly& num, const Poly& den);
    friend Poly operator/(const Poly& num, const Poly& den);

    Poly shifted(int k) const;  // multiply by X^k

    bool operator==(const Poly&) const = default;
    // ordering by degree, then by coefficients from the top down
    bool operator<(const Poly& rhs) const;

private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

Poly gcd(Poly a, Poly b);
Poly pow(const Poly& base, std::uint64_t e);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
// reciprocal with respect to the polynomial's own degree: X^deg * p(1/X)
Poly reciprocal(const Poly& p);
Poly derivative(const Poly& p);
// inverse of squaring; empty when p has an odd-exponent term
std::optional<Poly> try_sqrt(const Poly& p);

bool is_irreducible(const Poly& p);
// order of X modulo p equals 2^deg - 1; factors 2^deg - 1 by trial division,
// refusing degrees above `max_degree`
bool is_primitive(const Poly& p, int max_degree = 40);

// Text formats, both invertible:
//   exponent form  "x^5+x^2+1"   (case-insensitive, terms in any order)
//   hex form       "0x25@5"      (bits b_deg..b_0 MSB-first, "@" + degree)
Poly parse_poly(std::string_view text);
std::string to_exp_string(const Poly& p);
std::string to_hex_string(const Poly& p);

}  // namespace camodel
