#include "camodel/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace camodel {

namespace {

std::vector<std::uint8_t> parse_binary_bits(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else throw std::invalid_argument("invalid character in bit string");
    }
    if (bits.empty()) throw std::invalid_argument("empty bit string");
    return bits;
}

// "8C031@20" -> 20 bits, most significant hex bit first
std::vector<std::uint8_t> parse_hex_bits(std::string_view text) {
    const auto at = text.find('@');
    std::string_view digits = text.substr(0, at);
    std::string_view len_part = text.substr(at + 1);
    if (digits.empty() || len_part.empty()) throw std::invalid_argument("malformed hex bit string");
    int len = 0;
    for (char c : len_part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed bit length annotation");
        len = len * 10 + (c - '0');
        if (len > 1 << 20) throw std::invalid_argument("bit length too large");
    }
    if (len < 1) throw std::invalid_argument("bit length must be >= 1");
    if (static_cast<int>(digits.size()) * 4 < len)
        throw std::invalid_argument("hex string shorter than the annotated bit length");
    std::vector<std::uint8_t> raw;
    raw.reserve(digits.size() * 4);
    for (char c : digits) {
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw std::invalid_argument("invalid hex digit");
        for (int b = 3; b >= 0; --b) raw.push_back(static_cast<std::uint8_t>((nibble >> b) & 1));
    }
    // leading bits beyond the annotated length must be zero
    const std::size_t extra = raw.size() - static_cast<std::size_t>(len);
    for (std::size_t i = 0; i < extra; ++i)
        if (raw[i]) throw std::invalid_argument("hex value exceeds the annotated bit length");
    return std::vector<std::uint8_t>(raw.begin() + static_cast<long>(extra), raw.end());
}

std::string format_hex_bits(const std::vector<std::uint8_t>& bits) {
    const int len = static_cast<int>(bits.size());
    const int digits = (len + 3) / 4;
    std::string hex(static_cast<std::size_t>(digits), '0');
    for (int i = 0; i < len; ++i) {
        if (!bits[static_cast<std::size_t>(i)]) continue;
        const int pos = digits * 4 - len + i;  // bit position from the top
        const std::size_t digit_idx = static_cast<std::size_t>(pos / 4);
        const int cur = hex[digit_idx];
        const int val = (cur <= '9' ? cur - '0' : cur - 'A' + 10) | (1 << (3 - pos % 4));
        hex[digit_idx] = static_cast<char>(val < 10 ? '0' + val : 'A' + val - 10);
    }
    return hex + "@" + std::to_string(len);
}

std::string strip(std::string_view text) {
    std::string out;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::size_t last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) return out;
    return std::string(text.substr(first, last - first + 1));
}

std::uint64_t pack_msb(const std::vector<std::uint8_t>& bits) {
    if (bits.size() > 64) throw std::domain_error("more than 64 cells cannot be packed");
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | b;
    return v;
}

}  // namespace

RuleVector::RuleVector(std::vector<std::uint8_t> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw std::invalid_argument("rule vector must have at least one cell");
    for (auto r : rules_)
        if (r > 1) throw std::invalid_argument("rule entries must be 0 (rule 90) or 1 (rule 150)");
}

RuleVector RuleVector::parse(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty rule vector");
    if (s.find('@') != std::string::npos) return RuleVector(parse_hex_bits(s));
    if (s == "90") return RuleVector({0});
    if (s == "150") return RuleVector({1});
    if (s.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(s);
        std::vector<std::uint8_t> rules;
        std::string word;
        while (in >> word) {
            if (word == "90") rules.push_back(0);
            else if (word == "150") rules.push_back(1);
            else throw std::invalid_argument("rule words must be 90 or 150");
        }
        return RuleVector(std::move(rules));
    }
    return RuleVector(parse_binary_bits(s));
}

RuleVector RuleVector::reversed() const {
    std::vector<std::uint8_t> r(rules_.rbegin(), rules_.rend());
    return RuleVector(std::move(r));
}

std::uint64_t RuleVector::packed_msb() const { return pack_msb(rules_); }

std::string RuleVector::to_binary_string() const {
    std::string s;
    for (auto r : rules_) s.push_back(static_cast<char>('0' + r));
    return s;
}

std::string RuleVector::to_hex_string() const { return format_hex_bits(rules_); }

std::string RuleVector::to_word_string() const {
    std::string s;
    for (auto r : rules_) {
        if (!s.empty()) s += ' ';
        s += r ? "150" : "90";
    }
    return s;
}

CaState::CaState(std::vector<std::uint8_t> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("state must have at least one cell");
    for (auto c : cells_)
        if (c > 1) throw std::invalid_argument("cell contents must be 0 or 1");
}

CaState CaState::zero(int len) {
    if (len < 1) throw std::invalid_argument("state length must be >= 1");
    return CaState(std::vector<std::uint8_t>(static_cast<std::size_t>(len), 0));
}

CaState CaState::parse(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty state");
    if (s.find('@') != std::string::npos) return CaState(parse_hex_bits(s));
    return CaState(parse_binary_bits(s));
}

CaState CaState::from_packed_msb(std::uint64_t value, int len) {
    if (len < 1 || len > 64) throw std::invalid_argument("packed state length out of range");
    if (len < 64 && (value >> len) != 0)
        throw std::invalid_argument("value exceeds the requested bit length");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        cells[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1);
    return CaState(std::move(cells));
}

bool CaState::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c == 0; });
}

int CaState::weight() const {
    int w = 0;
    for (auto c : cells_) w += c;
    return w;
}

std::uint64_t CaState::packed_msb() const { return pack_msb(cells_); }

std::string CaState::to_binary_string() const {
    std::string s;
    for (auto c : cells_) s.push_back(static_cast<char>('0' + c));
    return s;
}

std::string CaState::to_hex_string() const { return format_hex_bits(cells_); }

CaState ca_step(const RuleVector& d, const CaState& s) {
    const int len = s.size();
    if (d.size() != len) throw std::invalid_argument("rule vector and state lengths differ");
    std::vector<std::uint8_t> next(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
        std::uint8_t v = 0;
        if (k > 0) v ^= s[k - 1];
        if (k + 1 < len) v ^= s[k + 1];
        if (d[k]) v ^= s[k];
        next[static_cast<std::size_t>(k)] = v;
    }
    return CaState(std::move(next));
}

BitSeq cell_sequence(const RuleVector& d, const CaState& s0, int cell, std::size_t n) {
    if (cell < 1 || cell > s0.size()) throw std::invalid_argument("cell index out of range");
    BitSeq out;
    CaState s = s0;
    for (std::size_t t = 0; t < n; ++t) {
        out.push_back(s[cell - 1] != 0);
        if (t + 1 < n) s = ca_step(d, s);
    }
    return out;
}

Poly ca_char_poly(const RuleVector& d) {
    Poly prev2 = Poly::zero();  // D_{-1}
    Poly prev1 = Poly::one();   // D_0
    for (int k = 0; k < d.size(); ++k) {
        Poly cur = prev1.shifted(1);
        if (d[k]) cur += prev1;
        cur += prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

}  // namespace camodel
