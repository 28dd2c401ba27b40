#pragma once

#include <cstdint>

#include "camodel/poly.hpp"

namespace camodel {

// GF(2^L) as residues modulo a fixed irreducible polynomial of degree
// L <= 63; elements are packed polynomial residues, bit i = coefficient of
// X^i. Arithmetic never leaves the field: products are reduced on the fly.
class Field {
public:
    using Elem = std::uint64_t;

    explicit Field(Poly modulus);

    int degree() const { return degree_; }
    const Poly& modulus() const { return modulus_; }
    std::uint64_t order() const { return (std::uint64_t{1} << degree_) - 1; }
    bool is_primitive() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem alpha() const { return alpha_; }  // residue class of X

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem sqr(Elem a) const { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const;
    // sum of the conjugates a^(2^j); always 0 or 1
    bool trace(Elem a) const;

    Elem from_poly(const Poly& p) const;
    Poly to_poly(Elem a) const;

private:
    Poly modulus_;
    std::uint64_t mod_bits_;
    int degree_;
    std::uint64_t alpha_;
    mutable int primitive_cache_ = -1;
};

}  // namespace camodel
