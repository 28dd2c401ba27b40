#include "camodel/field.hpp"

#include <stdexcept>

namespace camodel {

Field::Field(Poly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.is_zero() || modulus_.degree() < 1)
        throw std::invalid_argument("field modulus must have degree >= 1");
    if (modulus_.degree() > 63)
        throw std::domain_error("field degree capped at 63");
    if (!is_irreducible(modulus_))
        throw std::invalid_argument("field modulus must be irreducible");
    degree_ = modulus_.degree();
    mod_bits_ = modulus_.coeff_bits();
    alpha_ = from_poly(Poly::x());
}

bool Field::is_primitive() const {
    if (primitive_cache_ < 0)
        primitive_cache_ = camodel::is_primitive(modulus_) ? 1 : 0;
    return primitive_cache_ == 1;
}

Field::Elem Field::mul(Elem a, Elem b) const {
    const std::uint64_t top = std::uint64_t{1} << degree_;
    Elem r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= mod_bits_;
    }
    return r;
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return acc;
}

bool Field::trace(Elem a) const {
    Elem conj = a;
    Elem acc = a;
    for (int j = 1; j < degree_; ++j) {
        conj = sqr(conj);
        acc ^= conj;
    }
    if (acc > 1) throw std::logic_error("trace left the prime subfield");
    return acc == 1;
}

Field::Elem Field::from_poly(const Poly& p) const {
    return (p % modulus_).coeff_bits();
}

Poly Field::to_poly(Elem a) const { return Poly::from_coeff_bits(a); }

}  // namespace camodel
