#include "camodel/registers.hpp"

#include <numeric>
#include <stdexcept>

namespace camodel {

Lfsr::Lfsr(Poly charpoly, std::vector<std::uint8_t> state)
    : charpoly_(std::move(charpoly)), state_(std::move(state)) {
    if (charpoly_.is_zero() || charpoly_.degree() < 1)
        throw std::invalid_argument("characteristic polynomial must have degree >= 1");
    length_ = charpoly_.degree();
    if (state_.size() != static_cast<std::size_t>(length_))
        throw std::invalid_argument("state length must equal the polynomial degree");
    for (auto b : state_)
        if (b > 1) throw std::invalid_argument("state bits must be 0 or 1");
    taps_.resize(static_cast<std::size_t>(length_));
    for (int i = 1; i <= length_; ++i)
        taps_[static_cast<std::size_t>(i - 1)] = charpoly_.coeff(length_ - i) ? 1 : 0;
}

Lfsr Lfsr::with_all_ones(Poly charpoly) {
    const int len = charpoly.degree();
    if (len < 1) throw std::invalid_argument("characteristic polynomial must have degree >= 1");
    return Lfsr(std::move(charpoly), std::vector<std::uint8_t>(static_cast<std::size_t>(len), 1));
}

bool Lfsr::in_zero_state() const {
    for (auto b : state_)
        if (b) return false;
    return true;
}

bool Lfsr::clock() {
    const std::uint8_t out = state_[0];
    std::uint8_t fb = 0;
    for (int i = 1; i <= length_; ++i)
        fb ^= static_cast<std::uint8_t>(taps_[static_cast<std::size_t>(i - 1)] &
                                        state_[static_cast<std::size_t>(length_ - i)]);
    for (int k = 0; k + 1 < length_; ++k) state_[static_cast<std::size_t>(k)] = state_[static_cast<std::size_t>(k + 1)];
    state_[static_cast<std::size_t>(length_ - 1)] = fb;
    return out != 0;
}

BitSeq Lfsr::bits(std::size_t n) {
    BitSeq out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(clock());
    return out;
}

bool pn_trace_eval(const Field& f, Field::Elem a, std::uint64_t n) {
    if (!f.is_primitive())
        throw std::domain_error("trace-form evaluation needs a primitive modulus");
    return f.trace(f.mul(a, f.pow(f.alpha(), n)));
}

ShrinkConfig::ShrinkConfig(Lfsr sr1_in, Lfsr sr2_in)
    : sr1(std::move(sr1_in)), sr2(std::move(sr2_in)) {
    if (!is_primitive(sr1.charpoly()) || !is_primitive(sr2.charpoly()))
        throw std::invalid_argument("both characteristic polynomials must be primitive");
    if (std::gcd(sr1.length(), sr2.length()) != 1)
        throw std::invalid_argument("register lengths must be coprime");
}

BitSeq shrink(ShrinkConfig& cfg, std::size_t n) {
    if (cfg.sr1.in_zero_state() || cfg.sr2.in_zero_state())
        throw std::invalid_argument("degenerate generator: a register is in the zero state");
    BitSeq out;
    while (out.size() < n) {
        const bool control = cfg.sr1.clock();
        const bool data = cfg.sr2.clock();
        if (control) out.push_back(data);
    }
    return out;
}

CcsgConfig::CcsgConfig(Lfsr sr1_in, Lfsr sr2_in, std::vector<int> df_stages_in, std::uint32_t df_base_in)
    : sr1(std::move(sr1_in)), sr2(std::move(sr2_in)),
      df_stages(std::move(df_stages_in)), df_base(df_base_in) {
    if (df_base < 1) throw std::invalid_argument("decimation base must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(sr1.length()) + 1, false);
    for (int s : df_stages) {
        if (s < 1 || s > sr1.length())
            throw std::invalid_argument("decimation stage index out of range");
        if (seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("decimation stage indices must be distinct");
        seen[static_cast<std::size_t>(s)] = true;
    }
}

BitSeq ccsg_generate(CcsgConfig& cfg, std::size_t n) {
    if (cfg.sr1.in_zero_state() || cfg.sr2.in_zero_state())
        throw std::invalid_argument("degenerate generator: a register is in the zero state");
    BitSeq out;
    while (out.size() < n) {
        std::uint64_t df = cfg.df_base;
        for (std::size_t k = 0; k < cfg.df_stages.size(); ++k)
            df += static_cast<std::uint64_t>(cfg.sr1.state()[static_cast<std::size_t>(cfg.df_stages[k] - 1)]) << k;
        bool data = false;
        for (std::uint64_t i = 0; i < df; ++i) data = cfg.sr2.clock();
        const bool control = cfg.sr1.clock();
        if (control) out.push_back(data);
    }
    return out;
}

}  // namespace camodel
