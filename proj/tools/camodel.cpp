// Command-line front end: synthesis, concatenation, characteristic
// polynomials, generator modeling and verification, keystream generation,
// sequence analysis, cycle census, and evolution rendering.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "camodel/analysis.hpp"
#include "camodel/automaton.hpp"
#include "camodel/census.hpp"
#include "camodel/embed.hpp"
#include "camodel/modeler.hpp"
#include "camodel/poly.hpp"
#include "camodel/registers.hpp"
#include "camodel/synthesis.hpp"

namespace {

using namespace camodel;

constexpr std::uint64_t kDefaultGenCap = std::uint64_t{1} << 26;

std::vector<std::uint8_t> parse_seed(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else throw CLI::ValidationError("--s*", "seeds are bit strings, stage 1 first");
    }
    if (bits.empty()) throw CLI::ValidationError("--s*", "empty seed");
    return bits;
}

Lfsr make_lfsr(const std::string& poly_text, const std::string& seed_text) {
    Poly p = parse_poly(poly_text);
    if (seed_text.empty()) return Lfsr::with_all_ones(std::move(p));
    return Lfsr(std::move(p), parse_seed(seed_text));
}

// lowest-valued primitive polynomial of the given degree
Poly default_primitive(int degree) {
    if (degree < 1 || degree > 24) throw std::domain_error("no default polynomial for this degree");
    const std::uint64_t top = std::uint64_t{1} << degree;
    for (std::uint64_t mid = 0; mid < top; mid += 2) {
        const Poly p = Poly::from_coeff_bits(top | mid | 1);
        if (is_irreducible(p) && is_primitive(p)) return p;
    }
    throw std::logic_error("no primitive polynomial found");
}

BitSeq read_bits(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open bit stream file: " + path);
        buf << in.rdbuf();
    }
    return BitSeq::from_string(buf.str());
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

std::string render_ascii(const RuleVector& rule, CaState state, std::uint64_t steps) {
    std::string out;
    out.reserve(static_cast<std::size_t>(steps) * (static_cast<std::size_t>(rule.size()) + 1));
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (int c = 0; c < state.size(); ++c) out.push_back(state[c] ? '#' : '.');
        out.push_back('\n');
        if (t + 1 < steps) state = ca_step(rule, state);
    }
    return out;
}

std::string render_pgm(const RuleVector& rule, CaState state, std::uint64_t steps) {
    std::ostringstream out;
    out << "P2\n" << rule.size() << ' ' << steps << "\n1\n";
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (int c = 0; c < state.size(); ++c) {
            if (c) out << ' ';
            out << (state[c] ? 0 : 1);  // cells with content 1 render dark
        }
        out << '\n';
        if (t + 1 < steps) state = ca_step(rule, state);
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear 90/150 cellular-automata models of LFSR-based keystream generators"};
    app.require_subcommand(1);
    int exit_code = 0;

    // synth
    std::string synth_poly;
    auto* synth = app.add_subcommand("synth", "find the reversal pair of 90/150 automata for an irreducible polynomial");
    synth->add_option("--poly", synth_poly, "characteristic polynomial, e.g. x^5+x^2+1")->required();
    synth->callback([&] {
        const auto [a, b] = synthesize_ca(parse_poly(synth_poly));
        std::cout << a.to_binary_string() << '\n' << b.to_binary_string() << '\n';
    });

    // concat
    std::string concat_rule;
    int concat_times = 1;
    auto* concat = app.add_subcommand("concat", "double an automaton by mirrored concatenation");
    concat->add_option("--rule", concat_rule, "rule vector (binary, hex@len, or 90/150 words)")->required();
    concat->add_option("--times", concat_times, "number of doublings")->default_val(1)->check(CLI::PositiveNumber);
    concat->callback([&] {
        RuleVector d = RuleVector::parse(concat_rule);
        for (int i = 0; i < concat_times; ++i) d = concat_double(d);
        std::cout << d.to_binary_string() << '\n';
    });

    // charpoly
    std::string charpoly_rule;
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of an automaton");
    charpoly->add_option("--rule", charpoly_rule, "rule vector")->required();
    charpoly->callback([&] {
        std::cout << to_exp_string(ca_char_poly(RuleVector::parse(charpoly_rule))) << '\n';
    });

    // gen
    auto* gen = app.add_subcommand("gen", "generate keystream bits");
    gen->require_subcommand(1);
    std::string gen_poly, gen_seed, gen_p1, gen_s1, gen_p2, gen_s2, gen_out;
    std::uint64_t gen_count = 0, gen_cap = kDefaultGenCap;
    std::vector<int> gen_df_stages;
    std::uint32_t gen_df_base = 1;

    auto add_gen_common = [&](CLI::App* sub) {
        sub->add_option("--count", gen_count, "number of bits")->required();
        sub->add_option("--cap", gen_cap, "refuse to emit more bits than this")->default_val(kDefaultGenCap);
        sub->add_option("--out", gen_out, "output file ('-' for stdout)");
    };
    auto check_cap = [&] {
        if (gen_count > gen_cap)
            throw CLI::ValidationError("--count", "exceeds the generation cap; raise --cap explicitly");
    };

    auto* gen_lfsr = gen->add_subcommand("lfsr", "single register stream");
    gen_lfsr->add_option("--poly", gen_poly, "characteristic polynomial")->required();
    gen_lfsr->add_option("--seed", gen_seed, "initial state, stage 1 first (default all ones)");
    add_gen_common(gen_lfsr);
    gen_lfsr->callback([&] {
        check_cap();
        Lfsr r = make_lfsr(gen_poly, gen_seed);
        write_output(gen_out, r.bits(gen_count).to_string() + "\n");
    });

    auto* gen_sg = gen->add_subcommand("sg", "shrinking generator stream");
    gen_sg->add_option("--p1", gen_p1, "control register polynomial")->required();
    gen_sg->add_option("--s1", gen_s1, "control register seed (default all ones)");
    gen_sg->add_option("--p2", gen_p2, "generator register polynomial")->required();
    gen_sg->add_option("--s2", gen_s2, "generator register seed (default all ones)");
    add_gen_common(gen_sg);
    gen_sg->callback([&] {
        check_cap();
        ShrinkConfig cfg(make_lfsr(gen_p1, gen_s1), make_lfsr(gen_p2, gen_s2));
        write_output(gen_out, shrink(cfg, gen_count).to_string() + "\n");
    });

    auto* gen_ccsg = gen->add_subcommand("ccsg", "clock-controlled shrinking generator stream");
    gen_ccsg->add_option("--p1", gen_p1, "control register polynomial")->required();
    gen_ccsg->add_option("--s1", gen_s1, "control register seed (default all ones)");
    gen_ccsg->add_option("--p2", gen_p2, "generator register polynomial")->required();
    gen_ccsg->add_option("--s2", gen_s2, "generator register seed (default all ones)");
    gen_ccsg->add_option("--df-stages", gen_df_stages, "control stages feeding the clock function")->delimiter(',');
    gen_ccsg->add_option("--df-base", gen_df_base, "base clock count")->default_val(1);
    add_gen_common(gen_ccsg);
    gen_ccsg->callback([&] {
        check_cap();
        CcsgConfig cfg(make_lfsr(gen_p1, gen_s1), make_lfsr(gen_p2, gen_s2), gen_df_stages, gen_df_base);
        write_output(gen_out, ccsg_generate(cfg, gen_count).to_string() + "\n");
    });

    // analyze
    std::string analyze_bits, analyze_format = "text";
    std::uint64_t analyze_bound = 0;
    auto* analyze = app.add_subcommand("analyze", "linear complexity and period of a bit stream");
    analyze->add_option("--bits", analyze_bits, "bit stream file ('-' for stdin)")->required();
    analyze->add_option("--period-bound", analyze_bound, "known period multiple (enables period measurement)");
    analyze->add_option("--format", analyze_format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    analyze->callback([&] {
        const BitSeq s = read_bits(analyze_bits);
        const BmResult bm = berlekamp_massey(s);
        std::ostringstream out;
        if (analyze_format == "kv") {
            if (analyze_bound) out << "period=" << min_period(s, analyze_bound) << '\n';
            out << "lc=" << bm.lc << '\n' << "minpoly=" << to_exp_string(bm.charpoly) << '\n';
        } else {
            if (analyze_bound) out << "period=" << min_period(s, analyze_bound) << ' ';
            out << "lc=" << bm.lc << " minpoly=" << to_exp_string(bm.charpoly) << '\n';
        }
        std::cout << out.str();
    });

    // cycles
    std::string cycles_rule;
    int cycles_jobs = 1;
    auto* cycles = app.add_subcommand("cycles", "cycle census of an automaton's state space");
    cycles->add_option("--rule", cycles_rule, "rule vector")->required();
    cycles->add_option("--jobs", cycles_jobs, "parallel workers")->default_val(1)->check(CLI::PositiveNumber);
    cycles->callback([&] {
        const auto rows = enumerate_cycles(RuleVector::parse(cycles_rule), cycles_jobs);
        for (const auto& r : rows) {
            std::cout << "len=" << r.cycle_length << " class=" << to_string(r.state_class)
                      << " cycles=" << r.count_of_cycles << " states=" << r.total_states
                      << " rep=" << r.representative.to_hex_string() << '\n';
        }
    });

    // render
    std::string render_rule, render_state, render_format = "ascii", render_out;
    std::uint64_t render_steps = 0;
    auto* render = app.add_subcommand("render", "evolution diagram of an automaton");
    render->add_option("--rule", render_rule, "rule vector")->required();
    render->add_option("--state", render_state, "initial state")->required();
    render->add_option("--steps", render_steps, "number of rows")->required()->check(CLI::PositiveNumber);
    render->add_option("--format", render_format, "ascii or pgm")->check(CLI::IsMember({"ascii", "pgm"}));
    render->add_option("--out", render_out, "output file ('-' for stdout)");
    render->callback([&] {
        const RuleVector d = RuleVector::parse(render_rule);
        const CaState s0 = CaState::parse(render_state);
        if (s0.size() != d.size())
            throw CLI::ValidationError("--state", "state length must match the rule vector");
        write_output(render_out, render_format == "pgm" ? render_pgm(d, s0, render_steps)
                                                        : render_ascii(d, s0, render_steps));
    });

    // model-sg / verify
    int msg_l1 = 0;
    std::string msg_p1, msg_s1, msg_p2, msg_s2, msg_format = "text", verify_rule;

    auto run_sg_verification = [&](bool print_synth_pair, const std::string& rule_override) {
        const Poly p2 = parse_poly(msg_p2);
        const SgModel model = model_shrinking_generator(msg_l1, p2);
        const Poly p1 = msg_p1.empty() ? default_primitive(msg_l1) : parse_poly(msg_p1);
        ShrinkConfig cfg(msg_s1.empty() ? Lfsr::with_all_ones(p1) : Lfsr(p1, parse_seed(msg_s1)),
                         msg_s2.empty() ? Lfsr::with_all_ones(p2) : Lfsr(p2, parse_seed(msg_s2)));
        const RuleVector target = rule_override.empty() ? model.ca1 : RuleVector::parse(rule_override);
        const SgModelReport report = verify_model(std::move(cfg), target);
        if (msg_format == "kv") {
            std::cout << report_kv(report);
        } else {
            if (print_synth_pair) {
                const auto [a, b] = synthesize_ca(model.basic);
                std::cout << "synthesis pair:     " << a.to_binary_string() << ' '
                          << b.to_binary_string() << '\n';
            }
            std::cout << report_text(report);
        }
        if (!report.verdict) exit_code = 1;
    };

    auto* model_sg = app.add_subcommand("model-sg", "model a shrinking generator as a pair of automata and verify");
    model_sg->add_option("--l1", msg_l1, "control register length")->required()->check(CLI::PositiveNumber);
    model_sg->add_option("--p2", msg_p2, "generator register polynomial")->required();
    model_sg->add_option("--p1", msg_p1, "control polynomial (default: lowest primitive of degree l1)");
    model_sg->add_option("--s1", msg_s1, "control seed (default all ones)");
    model_sg->add_option("--s2", msg_s2, "generator seed (default all ones)");
    model_sg->add_option("--format", msg_format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    model_sg->callback([&] { run_sg_verification(true, ""); });

    auto* verify = app.add_subcommand("verify", "verify a rule vector against a shrinking generator");
    verify->add_option("--l1", msg_l1, "control register length")->required()->check(CLI::PositiveNumber);
    verify->add_option("--p2", msg_p2, "generator register polynomial")->required();
    verify->add_option("--p1", msg_p1, "control polynomial (default: lowest primitive of degree l1)");
    verify->add_option("--s1", msg_s1, "control seed (default all ones)");
    verify->add_option("--s2", msg_s2, "generator seed (default all ones)");
    verify->add_option("--rule", verify_rule, "rule vector to test (default: the model's own)");
    verify->add_option("--format", msg_format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    verify->callback([&] { run_sg_verification(false, verify_rule); });

    // model-ccsg
    std::string ccsg_p1, ccsg_s1, ccsg_p2, ccsg_s2, ccsg_format = "text";
    std::vector<int> ccsg_stages;
    std::uint32_t ccsg_base = 1;
    auto* model_ccsg_cmd = app.add_subcommand("model-ccsg", "model a clock-controlled shrinking generator empirically");
    model_ccsg_cmd->add_option("--p1", ccsg_p1, "control register polynomial")->required();
    model_ccsg_cmd->add_option("--s1", ccsg_s1, "control seed (default all ones)");
    model_ccsg_cmd->add_option("--p2", ccsg_p2, "generator register polynomial")->required();
    model_ccsg_cmd->add_option("--s2", ccsg_s2, "generator seed (default all ones)");
    model_ccsg_cmd->add_option("--df-stages", ccsg_stages, "control stages feeding the clock function")->delimiter(',');
    model_ccsg_cmd->add_option("--df-base", ccsg_base, "base clock count")->default_val(1);
    model_ccsg_cmd->add_option("--format", ccsg_format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    model_ccsg_cmd->callback([&] {
        CcsgConfig cfg(make_lfsr(ccsg_p1, ccsg_s1), make_lfsr(ccsg_p2, ccsg_s2), ccsg_stages, ccsg_base);
        const CcsgModelReport report = model_ccsg(std::move(cfg));
        std::cout << (ccsg_format == "kv" ? report_kv(report) : report_text(report));
        if (!report.verdict) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
