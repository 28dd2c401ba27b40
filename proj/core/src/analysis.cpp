#include "camodel/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace camodel {

BmResult berlekamp_massey(const BitSeq& s) {
    const std::size_t n = s.size();
    if (n == 0) throw std::invalid_argument("berlekamp_massey needs at least one bit");
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0);
    c[0] = b[0] = 1;
    int lc = 0;
    std::size_t m = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = s[i];
        for (int j = 1; j <= lc; ++j) d ^= static_cast<std::uint8_t>(c[static_cast<std::size_t>(j)] & s[i - static_cast<std::size_t>(j)]);
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * lc <= static_cast<int>(i)) {
            std::vector<std::uint8_t> t = c;
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            lc = static_cast<int>(i) + 1 - lc;
            b = std::move(t);
            m = 1;
        } else {
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            ++m;
        }
    }
    BmResult out;
    out.lc = lc;
    // reciprocal of the connection polynomial, padded to degree lc
    for (int j = 0; j <= lc; ++j)
        if (c[static_cast<std::size_t>(lc - j)]) out.charpoly.set_coeff(j, true);
    return out;
}

bool satisfies_recurrence(const BitSeq& s, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("zero polynomial defines no recurrence");
    const int d = q.degree();
    if (s.size() <= static_cast<std::size_t>(d))
        throw std::invalid_argument("sequence shorter than the recurrence order");
    std::vector<int> taps;
    for (int j = 0; j <= d; ++j)
        if (q.coeff(j)) taps.push_back(j);
    const std::size_t last = s.size() - static_cast<std::size_t>(d) - 1;
    for (std::size_t n = 0; n <= last; ++n) {
        std::uint8_t acc = 0;
        for (int j : taps) acc ^= s[n + static_cast<std::size_t>(j)];
        if (acc) return false;
    }
    return true;
}

std::uint64_t min_period(const BitSeq& s, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("period bound must be positive");
    if (s.size() < 2 * bound)
        throw std::invalid_argument("min_period needs at least 2*bound bits");
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t t = 1; t * t <= bound; ++t) {
        if (bound % t) continue;
        divisors.push_back(t);
        if (t != bound / t) divisors.push_back(bound / t);
    }
    std::sort(divisors.begin(), divisors.end());
    for (std::uint64_t t : divisors) {
        bool ok = true;
        for (std::size_t i = 0; i + t < s.size(); ++i) {
            if (s[i] != s[i + t]) {
                ok = false;
                break;
            }
        }
        if (ok) return t;
    }
    throw std::runtime_error("no divisor of the bound is a period of the observed window");
}

bool binom_mod2(std::uint64_t n, std::uint64_t i) { return (i & ~n) == 0; }

std::uint64_t binom_period(std::uint64_t i) {
    if (i == 0) return 1;
    return std::bit_ceil(i + 1);
}

}  // namespace camodel
