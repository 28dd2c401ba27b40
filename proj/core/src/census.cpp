#include "camodel/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <thread>

namespace camodel {

const char* to_string(StateClass c) {
    switch (c) {
        case StateClass::zero: return "zero";
        case StateClass::doubly_symmetric: return "doubly_symmetric";
        case StateClass::palindromic: return "palindromic";
        case StateClass::repetitive: return "repetitive";
        case StateClass::generic: return "generic";
    }
    return "?";
}

namespace {

constexpr std::array<std::uint8_t, 256> make_byte_reverse() {
    std::array<std::uint8_t, 256> t{};
    for (int i = 0; i < 256; ++i) {
        std::uint8_t r = 0;
        for (int b = 0; b < 8; ++b)
            if (i >> b & 1) r |= static_cast<std::uint8_t>(1 << (7 - b));
        t[static_cast<std::size_t>(i)] = r;
    }
    return t;
}

constexpr auto kByteReverse = make_byte_reverse();

std::uint32_t reverse_bits(std::uint32_t v, int len) {
    std::uint32_t r = (static_cast<std::uint32_t>(kByteReverse[v & 0xff]) << 24) |
                      (static_cast<std::uint32_t>(kByteReverse[(v >> 8) & 0xff]) << 16) |
                      (static_cast<std::uint32_t>(kByteReverse[(v >> 16) & 0xff]) << 8) |
                      static_cast<std::uint32_t>(kByteReverse[(v >> 24) & 0xff]);
    return r >> (32 - len);
}

StateClass classify_packed(std::uint32_t s, int len) {
    if (s == 0) return StateClass::zero;
    const bool pal = reverse_bits(s, len) == s;
    bool rep = false;
    if (len % 2 == 0) {
        const int h = len / 2;
        rep = (s >> h) == (s & ((std::uint32_t{1} << h) - 1));
    }
    if (pal && rep) return StateClass::doubly_symmetric;
    if (pal) return StateClass::palindromic;
    if (rep) return StateClass::repetitive;
    return StateClass::generic;
}

struct GroupStats {
    std::uint64_t cycles = 0;
    std::uint64_t states = 0;
    std::uint32_t min_rep = ~std::uint32_t{0};
};

using GroupMap = std::map<std::pair<std::uint64_t, StateClass>, GroupStats>;

// Classifies one full cycle starting at its minimal state.
void record_cycle(std::uint32_t start, std::uint32_t rule_mask, int len, GroupMap& groups,
                  std::vector<std::uint64_t>* visited) {
    std::array<std::uint64_t, 5> tally{};
    std::uint64_t length = 0;
    std::uint32_t cur = start;
    do {
        if (visited) (*visited)[cur >> 6] |= std::uint64_t{1} << (cur & 63);
        tally[static_cast<std::size_t>(classify_packed(cur, len))] += 1;
        ++length;
        cur = static_cast<std::uint32_t>(ca_step_packed(cur, rule_mask, len));
    } while (cur != start);
    std::size_t dominant = 0;
    for (std::size_t i = 1; i < tally.size(); ++i)
        if (tally[i] > tally[dominant]) dominant = i;
    auto& g = groups[{length, static_cast<StateClass>(dominant)}];
    g.cycles += 1;
    g.states += length;
    g.min_rep = std::min(g.min_rep, start);
}

void merge_groups(GroupMap& into, const GroupMap& from) {
    for (const auto& [key, stats] : from) {
        auto& g = into[key];
        g.cycles += stats.cycles;
        g.states += stats.states;
        g.min_rep = std::min(g.min_rep, stats.min_rep);
    }
}

}  // namespace

StateClass classify_state(const CaState& s) {
    if (s.is_zero()) return StateClass::zero;
    const auto& cells = s.cells();
    const std::size_t len = cells.size();
    bool pal = true;
    for (std::size_t i = 0; i < len / 2 && pal; ++i)
        if (cells[i] != cells[len - 1 - i]) pal = false;
    bool rep = false;
    if (len % 2 == 0) {
        rep = true;
        const std::size_t h = len / 2;
        for (std::size_t i = 0; i < h && rep; ++i)
            if (cells[i] != cells[h + i]) rep = false;
    }
    if (pal && rep) return StateClass::doubly_symmetric;
    if (pal) return StateClass::palindromic;
    if (rep) return StateClass::repetitive;
    return StateClass::generic;
}

std::vector<CycleSummary> enumerate_cycles(const RuleVector& d, int jobs, int max_cells) {
    const int len = d.size();
    if (len > max_cells)
        throw std::invalid_argument("enumeration bound exceeded: " + std::to_string(len) + " cells");
    if (len > 32) throw std::invalid_argument("enumeration supports at most 32 cells");
    if (!ca_char_poly(d).coeff(0))
        throw std::domain_error("state map is not invertible; states do not partition into cycles");
    const std::uint32_t rule_mask = static_cast<std::uint32_t>(d.packed_msb());
    const std::uint64_t total = std::uint64_t{1} << len;

    GroupMap groups;
    if (jobs <= 1) {
        std::vector<std::uint64_t> visited((total + 63) / 64, 0);
        for (std::uint64_t s = 0; s < total; ++s) {
            if (visited[s >> 6] >> (s & 63) & 1) continue;
            // the first unvisited state in ascending order is its cycle's minimum
            record_cycle(static_cast<std::uint32_t>(s), rule_mask, len, groups, &visited);
        }
    } else {
        // Each worker claims the cycles whose minimal state falls in its
        // stride; a walk is abandoned as soon as a smaller state shows up.
        std::vector<GroupMap> partial(static_cast<std::size_t>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                GroupMap local;
                for (std::uint64_t s = static_cast<std::uint64_t>(w); s < total; s += static_cast<std::uint64_t>(jobs)) {
                    std::uint32_t cur = static_cast<std::uint32_t>(ca_step_packed(static_cast<std::uint32_t>(s), rule_mask, len));
                    bool minimal = true;
                    while (cur != s) {
                        if (cur < s) {
                            minimal = false;
                            break;
                        }
                        cur = static_cast<std::uint32_t>(ca_step_packed(cur, rule_mask, len));
                    }
                    if (minimal) record_cycle(static_cast<std::uint32_t>(s), rule_mask, len, local, nullptr);
                }
                partial[static_cast<std::size_t>(w)] = std::move(local);
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& p : partial) merge_groups(groups, p);
    }

    std::vector<CycleSummary> out;
    out.reserve(groups.size());
    for (const auto& [key, stats] : groups) {
        CycleSummary row{key.first, key.second, CaState::from_packed_msb(stats.min_rep, len),
                         stats.cycles, stats.states};
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace camodel
