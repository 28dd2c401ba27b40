#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace camodel {

// A finite binary sequence indexed from 0. One byte per bit keeps indexing
// trivial; everything in this library is desk scale.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
    }

    // '0'/'1' characters; whitespace is ignored
    static BitSeq from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
            else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') continue;
            else throw std::invalid_argument("invalid character in bit stream");
        }
        return BitSeq(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void push_back(bool b) { bits_.push_back(b ? 1 : 0); }

    BitSeq prefix(std::size_t n) const {
        if (n > bits_.size()) throw std::invalid_argument("prefix longer than sequence");
        return BitSeq(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<long>(n)));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool operator==(const BitSeq&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace camodel
