#include "camodel/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace camodel {

namespace {

constexpr int kWordBits = 64;

std::uint64_t factor_out(std::uint64_t& n, std::uint64_t d) {
    std::uint64_t count = 0;
    while (n % d == 0) {
        n /= d;
        ++count;
    }
    return count;
}

}  // namespace

Poly Poly::monomial(int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    Poly p;
    p.set_coeff(exponent, true);
    return p;
}

Poly Poly::from_coeff_bits(std::uint64_t coeff_bits) {
    Poly p;
    if (coeff_bits != 0) p.words_.push_back(coeff_bits);
    return p;
}

int Poly::degree() const {
    if (words_.empty()) return kZeroDegree;
    const std::uint64_t top = words_.back();
    return static_cast<int>(words_.size()) * kWordBits - std::countl_zero(top) - 1;
}

bool Poly::coeff(int i) const {
    if (i < 0) return false;
    const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1u;
}

void Poly::set_coeff(int i, bool value) {
    if (i < 0) throw std::invalid_argument("negative exponent");
    const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (value) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % kWordBits);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
        normalize();
    }
}

std::uint64_t Poly::coeff_bits() const {
    if (words_.size() > 1) throw std::domain_error("polynomial degree exceeds 63");
    return words_.empty() ? 0 : words_[0];
}

void Poly::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero() || k == 0) return *this;
    Poly out;
    const int word_shift = k / kWordBits;
    const int bit_shift = k % kWordBits;
    out.words_.assign(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0)
            out.words_[i + word_shift + 1] ^= words_[i] >> (kWordBits - bit_shift);
    }
    out.normalize();
    return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly::zero();
    Poly acc;
    acc.words_.assign(lhs.words_.size() + rhs.words_.size(), 0);
    for (std::size_t w = 0; w < lhs.words_.size(); ++w) {
        std::uint64_t bits = lhs.words_[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            const Poly part = rhs.shifted(static_cast<int>(w) * kWordBits + b);
            if (part.words_.size() > acc.words_.size()) acc.words_.resize(part.words_.size(), 0);
            for (std::size_t i = 0; i < part.words_.size(); ++i) acc.words_[i] ^= part.words_[i];
        }
    }
    acc.normalize();
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Poly q;
    Poly r = num;
    const int dd = den.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        q.set_coeff(shift, true);
        r += den.shifted(shift);
    }
    return {q, r};
}

Poly operator%(const Poly& num, const Poly& den) { return divmod(num, den).second; }
Poly operator/(const Poly& num, const Poly& den) { return divmod(num, den).first; }

bool Poly::operator<(const Poly& rhs) const {
    const int da = degree();
    const int db = rhs.degree();
    if (da != db) return da < db;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != rhs.words_[i]) return words_[i] < rhs.words_[i];
    }
    return false;
}

Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly pow(const Poly& base, std::uint64_t e) {
    Poly acc = Poly::one();
    Poly sq = base;
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    if (mod.is_zero()) throw std::invalid_argument("zero modulus");
    Poly acc = Poly::one() % mod;
    base = base % mod;
    while (e) {
        if (e & 1) acc = (acc * base) % mod;
        e >>= 1;
        if (e) base = (base * base) % mod;
    }
    return acc;
}

Poly reciprocal(const Poly& p) {
    if (p.is_zero()) return p;
    const int d = p.degree();
    Poly out;
    for (int i = 0; i <= d; ++i)
        if (p.coeff(i)) out.set_coeff(d - i, true);
    return out;
}

Poly derivative(const Poly& p) {
    Poly out;
    for (int i = 1; i <= (p.is_zero() ? 0 : p.degree()); ++i)
        if ((i & 1) && p.coeff(i)) out.set_coeff(i - 1, true);
    return out;
}

std::optional<Poly> try_sqrt(const Poly& p) {
    Poly out;
    const int d = p.is_zero() ? -1 : p.degree();
    for (int i = 0; i <= d; ++i) {
        if (!p.coeff(i)) continue;
        if (i & 1) return std::nullopt;
        out.set_coeff(i / 2, true);
    }
    return out;
}

bool is_irreducible(const Poly& p) {
    const int degree = p.is_zero() ? -1 : p.degree();
    if (degree < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
    // Rabin's criterion: X^(2^L) == X (mod p) and for every prime divisor q
    // of L the polynomial X^(2^(L/q)) - X is coprime with p.
    const Poly x = Poly::x() % p;
    Poly frob = x;
    std::vector<Poly> tower(1, frob);  // tower[k] = X^(2^k) mod p for k >= 1 below
    for (int k = 1; k <= degree; ++k) {
        frob = (frob * frob) % p;
        tower.push_back(frob);
    }
    if (tower[static_cast<std::size_t>(degree)] != x) return false;
    std::uint64_t n = static_cast<std::uint64_t>(degree);
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        factor_out(n, q);
        const Poly diff = tower[degree / static_cast<int>(q)] + x;
        if (diff.is_zero() || !gcd(diff, p).is_one()) return false;
    }
    if (n > 1) {
        const Poly diff = tower[degree / static_cast<int>(n)] + x;
        if (diff.is_zero() || !gcd(diff, p).is_one()) return false;
    }
    return true;
}

bool is_primitive(const Poly& p, int max_degree) {
    if (!is_irreducible(p)) throw std::invalid_argument("primitivity requires an irreducible polynomial");
    const int degree = p.degree();
    if (degree > max_degree || degree > 62)
        throw std::domain_error("primitivity test capped: cannot factor 2^" + std::to_string(degree) + "-1");
    if (!p.coeff(0)) return false;  // p = X: no multiplicative order
    std::uint64_t n = (std::uint64_t{1} << degree) - 1;
    if (n == 1) return true;
    std::uint64_t rest = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 3; d * d <= rest; d += 2) {
        if (rest % d == 0) {
            primes.push_back(d);
            factor_out(rest, d);
        }
    }
    if (rest > 1) primes.push_back(rest);
    for (std::uint64_t q : primes) {
        if (powmod(Poly::x(), n / q, p).is_one()) return false;
    }
    return true;
}

namespace {

Poly parse_hex_form(std::string_view text) {
    const auto at = text.find('@');
    if (at == std::string_view::npos) throw std::invalid_argument("hex polynomial needs '@degree'");
    std::string_view digits = text.substr(2, at - 2);
    std::string_view deg_part = text.substr(at + 1);
    if (digits.empty() || deg_part.empty()) throw std::invalid_argument("malformed hex polynomial");
    int annotated = 0;
    for (char c : deg_part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed degree annotation");
        annotated = annotated * 10 + (c - '0');
        if (annotated > 1 << 20) throw std::invalid_argument("degree annotation too large");
    }
    Poly p;
    const int total_bits = static_cast<int>(digits.size()) * 4;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw std::invalid_argument("invalid hex digit in polynomial");
        for (int b = 0; b < 4; ++b) {
            if (nibble >> (3 - b) & 1) {
                const int exp = total_bits - 1 - (static_cast<int>(i) * 4 + b);
                p.set_coeff(exp, true);
            }
        }
    }
    if (!p.is_zero() && p.degree() > annotated)
        throw std::invalid_argument("hex polynomial value exceeds its degree annotation");
    return p;
}

Poly parse_exp_form(std::string_view text) {
    Poly p;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        const auto next = text.find('+', pos);
        std::string_view term = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
        if (term.empty()) throw std::invalid_argument("empty term in polynomial");
        any = true;
        if (term == "0") continue;
        if (term == "1") {
            p += Poly::one();
            continue;
        }
        if (term[0] != 'x') throw std::invalid_argument("malformed polynomial term: " + std::string(term));
        if (term.size() == 1) {
            p += Poly::x();
            continue;
        }
        if (term[1] != '^') throw std::invalid_argument("malformed polynomial term: " + std::string(term));
        int exp = 0;
        if (term.size() == 2) throw std::invalid_argument("missing exponent");
        for (char c : term.substr(2)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed exponent: " + std::string(term));
            exp = exp * 10 + (c - '0');
            if (exp > 1 << 20) throw std::invalid_argument("exponent too large");
        }
        p += Poly::monomial(exp);
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return p;
}

}  // namespace

Poly parse_poly(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (cleaned.empty()) throw std::invalid_argument("empty polynomial text");
    if (cleaned.size() > 2 && cleaned[0] == '0' && cleaned[1] == 'x')
        return parse_hex_form(cleaned);
    return parse_exp_form(cleaned);
}

std::string to_exp_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) out += '1';
        else if (i == 1) out += 'x';
        else out += "x^" + std::to_string(i);
    }
    return out;
}

std::string to_hex_string(const Poly& p) {
    if (p.is_zero()) return "0x0@0";
    const int d = p.degree();
    const int digits = (d + 1 + 3) / 4;
    std::string hex(static_cast<std::size_t>(digits), '0');
    for (int i = 0; i <= d; ++i) {
        if (!p.coeff(i)) continue;
        const int digit_idx = digits - 1 - i / 4;
        const int cur = hex[static_cast<std::size_t>(digit_idx)];
        const int val = (cur <= '9' ? cur - '0' : cur - 'A' + 10) | (1 << (i % 4));
        hex[static_cast<std::size_t>(digit_idx)] = static_cast<char>(val < 10 ? '0' + val : 'A' + val - 10);
    }
    return "0x" + hex + "@" + std::to_string(d);
}

}  // namespace camodel
