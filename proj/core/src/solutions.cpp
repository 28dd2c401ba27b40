#include "camodel/solutions.hpp"

#include <stdexcept>

namespace camodel {

bool solution_eval(const SolutionCoeffs& c, std::uint64_t n) {
    if (!c.field.is_primitive())
        throw std::domain_error("solution evaluation needs a primitive modulus");
    const Field::Elem an = c.field.pow(c.field.alpha(), n);
    bool acc = false;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (!binom_mod2(n, i)) continue;
        acc ^= c.field.trace(c.field.mul(c.coeffs[i], an));
    }
    return acc;
}

BitSeq solution_stream(const SolutionCoeffs& c, std::size_t n) {
    if (!c.field.is_primitive())
        throw std::domain_error("solution evaluation needs a primitive modulus");
    BitSeq out;
    std::vector<Field::Elem> cur = c.coeffs;  // A_i * alpha^t
    for (std::size_t t = 0; t < n; ++t) {
        bool acc = false;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (binom_mod2(t, i)) acc ^= c.field.trace(cur[i]);
        out.push_back(acc);
        for (auto& e : cur) e = c.field.mul(e, c.field.alpha());
    }
    return out;
}

std::uint64_t predict_period(const std::vector<bool>& nonzero, int degree) {
    if (degree < 1 || degree > 62) throw std::invalid_argument("degree out of range");
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        if (nonzero[i]) best = std::max(best, binom_period(i));
    if (best == 0) throw std::invalid_argument("the null sequence has no period class");
    return best * ((std::uint64_t{1} << degree) - 1);
}

std::uint64_t predict_lc(const std::vector<bool>& nonzero, int degree) {
    if (degree < 1) throw std::invalid_argument("degree out of range");
    for (std::size_t i = nonzero.size(); i-- > 0;)
        if (nonzero[i]) return (static_cast<std::uint64_t>(i) + 1) * static_cast<std::uint64_t>(degree);
    throw std::invalid_argument("the null sequence has no linear complexity class");
}

SequenceCountPrediction predict_counts(int degree, int p) {
    if (degree < 1 || p < 1) throw std::invalid_argument("degree and multiplicity must be >= 1");
    SequenceCountPrediction out;
    for (int i = 0; i < p; ++i) {
        const std::uint64_t exp = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(degree);
        if (exp >= 63) throw std::domain_error("sequence count overflows 64 bits");
        out.per_class.push_back((std::uint64_t{1} << exp) / binom_period(static_cast<std::uint64_t>(i)));
        out.total += out.per_class.back();
    }
    return out;
}

}  // namespace camodel
