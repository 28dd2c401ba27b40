#include "camodel/modeler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "camodel/analysis.hpp"
#include "camodel/embed.hpp"

namespace camodel {

CosetSpec cyclotomic_coset(std::uint64_t e, int degree) {
    if (degree < 1 || degree > 62) throw std::invalid_argument("field degree out of range");
    const std::uint64_t n = (std::uint64_t{1} << degree) - 1;
    if (e == 0 || e >= n)
        throw std::invalid_argument("coset leader must satisfy 0 < E < 2^L - 1");
    CosetSpec spec;
    spec.leader = e;
    spec.field_degree = degree;
    std::uint64_t cur = e;
    do {
        spec.members.push_back(cur);
        cur = (cur * 2) % n;
    } while (cur != e);
    std::sort(spec.members.begin(), spec.members.end());
    return spec;
}

Poly coset_char_poly(const Field& f, std::uint64_t e) {
    if (!f.is_primitive())
        throw std::domain_error("coset polynomial expansion needs a primitive modulus");
    const CosetSpec coset = cyclotomic_coset(e, f.degree());
    // multiply out (X + alpha^m) over the coset, coefficients in GF(2^L)
    std::vector<Field::Elem> coeffs{f.one()};
    for (std::uint64_t m : coset.members) {
        const Field::Elem root = f.pow(f.alpha(), m);
        std::vector<Field::Elem> next(coeffs.size() + 1, f.zero());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= f.mul(coeffs[i], root);
        }
        coeffs = std::move(next);
    }
    Poly out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error("coset polynomial coefficient left GF(2)");
        if (coeffs[i]) out.set_coeff(static_cast<int>(i), true);
    }
    return out;
}

SgPrediction sg_predicted_props(int l1, int l2) {
    if (l1 < 2 || l2 < 2) throw std::invalid_argument("register lengths must be >= 2");
    if (l1 + l2 > 62) throw std::domain_error("register lengths beyond desk scale");
    if (std::gcd(l1, l2) != 1)
        throw std::invalid_argument("register lengths must be coprime");
    SgPrediction p;
    p.coset_leader = (std::uint64_t{1} << l1) - 1;
    p.period = ((std::uint64_t{1} << l2) - 1) << (l1 - 1);
    p.lc_low = static_cast<std::uint64_t>(l2) << (l1 - 2);
    p.lc_high = static_cast<std::uint64_t>(l2) << (l1 - 1);
    p.p_low = std::uint64_t{1} << (l1 - 2);
    p.p_high = std::uint64_t{1} << (l1 - 1);
    return p;
}

SgModel model_shrinking_generator(int l1, const Poly& p2) {
    if (l1 < 1) throw std::invalid_argument("control register length must be >= 1");
    if (!is_primitive(p2)) throw std::invalid_argument("generator polynomial must be primitive");
    const int l2 = p2.degree();
    if (std::gcd(l1, l2) != 1)
        throw std::invalid_argument("register lengths must be coprime");
    const Field f(p2);
    const std::uint64_t e = ((std::uint64_t{1} << l1) - 1) % f.order();
    SgModel model;
    model.basic = coset_char_poly(f, e);
    model.p = std::uint64_t{1} << (l1 - 1);
    auto [a, b] = build_mpca(model.basic, model.p);
    model.ca1 = std::move(a);
    model.ca2 = std::move(b);
    return model;
}

namespace {

bool is_power_of(const Poly& candidate, const Poly& base, std::uint64_t max_exp) {
    Poly acc = base;
    for (std::uint64_t k = 1; k <= max_exp; ++k) {
        if (acc == candidate) return true;
        if (acc.degree() > candidate.degree()) return false;
        acc = acc * base;
    }
    return false;
}

// Embeds the first window of the keystream and replays a full period.
// Returns false with a diagnostic instead of throwing.
bool embed_and_replay(const RuleVector& d, const BitSeq& keystream, std::uint64_t period,
                      CaState& state_out, std::string& diagnostic) {
    try {
        const CaState state = embed_sequence(d, keystream.prefix(static_cast<std::size_t>(d.size())));
        const BitSeq replay = cell_sequence(d, state, 1, static_cast<std::size_t>(period));
        if (replay != keystream.prefix(static_cast<std::size_t>(period))) {
            diagnostic = "embedded state does not replay the full period";
            return false;
        }
        state_out = state;
        return true;
    } catch (const inconsistent_system& e) {
        diagnostic = e.what();
        return false;
    }
}

}  // namespace

SgModelReport verify_model(ShrinkConfig cfg, const RuleVector& d) {
    const int l1 = cfg.sr1.length();
    const int l2 = cfg.sr2.length();
    SgModelReport r;
    r.predicted = sg_predicted_props(l1, l2);
    const Field f(cfg.sr2.charpoly());
    r.basic_poly = coset_char_poly(f, r.predicted.coset_leader % f.order());
    r.p_used = std::uint64_t{1} << (l1 - 1);
    if (d.size() != static_cast<int>(r.p_used) * l2)
        throw std::invalid_argument("rule vector length does not match the generator's model size");
    // pair up with the model's companion chain when d is one of its vectors
    // (doubled vectors are palindromes, so reversal alone says nothing)
    const SgModel model = model_shrinking_generator(l1, cfg.sr2.charpoly());
    if (d == model.ca1 || d == model.ca2) {
        r.ca1 = model.ca1;
        r.ca2 = model.ca2;
    } else {
        r.ca1 = d;
        r.ca2 = d.reversed();
    }

    const std::size_t n = 2 * static_cast<std::size_t>(r.predicted.period) + static_cast<std::size_t>(d.size());
    const BitSeq ks = shrink(cfg, n);

    bool ok = true;
    std::ostringstream diag;
    try {
        r.measured.period = min_period(ks, r.predicted.period);
    } catch (const std::exception& e) {
        ok = false;
        diag << "period measurement failed: " << e.what() << "; ";
        r.measured.period = 0;
    }
    const BmResult bm = berlekamp_massey(ks);
    r.measured.lc = bm.lc;
    r.measured.minimal_poly = bm.charpoly;

    if (ok && r.measured.period != r.predicted.period) {
        ok = false;
        diag << "measured period " << r.measured.period << " != predicted " << r.predicted.period << "; ";
    }
    const std::uint64_t lc = static_cast<std::uint64_t>(r.measured.lc);
    if (!(r.predicted.lc_low < lc && lc <= r.predicted.lc_high)) {
        ok = false;
        diag << "linear complexity " << lc << " outside (" << r.predicted.lc_low << ", "
             << r.predicted.lc_high << "]; ";
    }
    if (!is_power_of(r.measured.minimal_poly, r.basic_poly, r.p_used)) {
        ok = false;
        diag << "minimal polynomial is not a power of " << to_exp_string(r.basic_poly) << "; ";
    }
    std::string embed_diag;
    CaState embedded = CaState::zero(d.size());
    if (embed_and_replay(d, ks, ok ? r.measured.period : static_cast<std::uint64_t>(d.size()),
                         embedded, embed_diag)) {
        r.embedding_state = embedded;
    } else {
        ok = false;
        diag << embed_diag << "; ";
        r.embedding_state = CaState::zero(d.size());
    }
    r.verdict = ok;
    r.diagnostic = diag.str();
    return r;
}

std::pair<Poly, std::uint64_t> extract_irreducible_power(const Poly& m) {
    if (m.is_zero() || m.degree() < 1)
        throw std::domain_error("cannot factor a constant polynomial as an irreducible power");
    const Poly d = derivative(m);
    if (d.is_zero()) {
        const auto root = try_sqrt(m);
        if (!root) throw std::logic_error("vanishing derivative without a square root");
        auto [base, k] = extract_irreducible_power(*root);
        return {base, 2 * k};
    }
    const Poly g = gcd(m, d);
    Poly base;
    if (g.is_one()) {
        base = m;
    } else {
        base = m / g;
    }
    if (base.degree() < 1 || m.degree() % base.degree() != 0)
        throw std::domain_error("minimal polynomial is not a power of a single irreducible (base candidate " +
                                to_exp_string(base) + ")");
    const std::uint64_t k = static_cast<std::uint64_t>(m.degree() / base.degree());
    if (pow(base, k) != m || !is_irreducible(base))
        throw std::domain_error("minimal polynomial is not a power of a single irreducible (factors " +
                                to_exp_string(base) + " and " + to_exp_string(g) + ")");
    return {base, k};
}

CcsgModelReport model_ccsg(CcsgConfig cfg) {
    if (cfg.sr1.in_zero_state() || cfg.sr2.in_zero_state())
        throw std::invalid_argument("degenerate generator: a register is in the zero state");
    const int l1 = cfg.sr1.length();
    const std::uint64_t q2 = (std::uint64_t{1} << cfg.sr2.length()) - 1;

    // total advance of sr2 over one full cycle of sr1
    std::uint64_t advance = 0;
    {
        Lfsr probe = cfg.sr1;
        const std::uint64_t q1 = (std::uint64_t{1} << l1) - 1;
        for (std::uint64_t t = 0; t < q1; ++t) {
            std::uint64_t df = cfg.df_base;
            for (std::size_t k = 0; k < cfg.df_stages.size(); ++k)
                df += static_cast<std::uint64_t>(probe.state()[static_cast<std::size_t>(cfg.df_stages[k] - 1)]) << k;
            advance += df;
            probe.clock();
        }
    }
    const std::uint64_t bound = (q2 / std::gcd(advance, q2)) << (l1 - 1);

    const std::size_t n = 2 * static_cast<std::size_t>(bound) +
                          std::max<std::size_t>(64, static_cast<std::size_t>(cfg.sr2.length()) << (l1 - 1));
    const BitSeq ks = ccsg_generate(cfg, n);

    CcsgModelReport r;
    const BmResult bm = berlekamp_massey(ks);
    r.measured.lc = bm.lc;
    r.measured.minimal_poly = bm.charpoly;
    auto [base, p] = extract_irreducible_power(bm.charpoly);
    r.basic_poly = base;
    r.p_used = p;
    auto [a, b] = build_mpca(base, p);
    r.ca1 = std::move(a);
    r.ca2 = std::move(b);
    r.measured.period = min_period(ks, bound);

    std::string embed_diag;
    CaState embedded = CaState::zero(r.ca1.size());
    bool ok = true;
    std::ostringstream diag;
    if (static_cast<std::size_t>(r.ca1.size()) > ks.size()) {
        ok = false;
        diag << "keystream shorter than the automaton; ";
    } else if (embed_and_replay(r.ca1, ks, r.measured.period, embedded, embed_diag)) {
        r.embedding_state = embedded;
    } else {
        ok = false;
        diag << embed_diag << "; ";
    }
    r.verdict = ok;
    r.diagnostic = diag.str();
    return r;
}

namespace {

std::string verdict_str(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string report_text(const SgModelReport& r) {
    std::ostringstream out;
    out << "basic polynomial:   " << to_exp_string(r.basic_poly) << "\n"
        << "automaton 1:        " << r.ca1.to_binary_string() << "\n"
        << "automaton 2:        " << r.ca2.to_binary_string() << "\n"
        << "multiplicity p:     " << r.p_used << "\n"
        << "predicted period:   " << r.predicted.period << "\n"
        << "predicted lc:       (" << r.predicted.lc_low << ", " << r.predicted.lc_high << "]\n"
        << "measured period:    " << r.measured.period << "\n"
        << "measured lc:        " << r.measured.lc << "\n"
        << "minimal polynomial: " << to_exp_string(r.measured.minimal_poly) << "\n"
        << "embedding state:    " << r.embedding_state.to_hex_string() << "\n"
        << "verdict:            " << verdict_str(r.verdict) << "\n";
    if (!r.verdict && !r.diagnostic.empty()) out << "diagnostic:         " << r.diagnostic << "\n";
    return out.str();
}

std::string report_kv(const SgModelReport& r) {
    std::ostringstream out;
    out << "basic_poly=" << to_exp_string(r.basic_poly) << "\n"
        << "ca1=" << r.ca1.to_binary_string() << "\n"
        << "ca2=" << r.ca2.to_binary_string() << "\n"
        << "p=" << r.p_used << "\n"
        << "predicted_period=" << r.predicted.period << "\n"
        << "measured_period=" << r.measured.period << "\n"
        << "lc=" << r.measured.lc << "\n"
        << "minimal_poly=" << to_exp_string(r.measured.minimal_poly) << "\n"
        << "verdict=" << verdict_str(r.verdict) << "\n";
    return out.str();
}

std::string report_text(const CcsgModelReport& r) {
    std::ostringstream out;
    out << "basic polynomial:   " << to_exp_string(r.basic_poly) << "\n"
        << "automaton 1:        " << r.ca1.to_binary_string() << "\n"
        << "automaton 2:        " << r.ca2.to_binary_string() << "\n"
        << "multiplicity p:     " << r.p_used << "\n"
        << "measured period:    " << r.measured.period << "\n"
        << "measured lc:        " << r.measured.lc << "\n"
        << "minimal polynomial: " << to_exp_string(r.measured.minimal_poly) << "\n"
        << "embedding state:    " << r.embedding_state.to_hex_string() << "\n"
        << "verdict:            " << verdict_str(r.verdict) << "\n";
    if (!r.verdict && !r.diagnostic.empty()) out << "diagnostic:         " << r.diagnostic << "\n";
    return out.str();
}

std::string report_kv(const CcsgModelReport& r) {
    std::ostringstream out;
    out << "basic_poly=" << to_exp_string(r.basic_poly) << "\n"
        << "ca1=" << r.ca1.to_binary_string() << "\n"
        << "ca2=" << r.ca2.to_binary_string() << "\n"
        << "p=" << r.p_used << "\n"
        << "measured_period=" << r.measured.period << "\n"
        << "lc=" << r.measured.lc << "\n"
        << "minimal_poly=" << to_exp_string(r.measured.minimal_poly) << "\n"
        << "verdict=" << verdict_str(r.verdict) << "\n";
    return out.str();
}

}  // namespace camodel
