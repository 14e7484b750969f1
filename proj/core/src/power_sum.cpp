#include "chromaprob/power_sum.hpp"

#include <algorithm>

namespace chromaprob {

PowerSumPolynomial ps_constant(const Rational& value) {
    PowerSumPolynomial f;
    if (value != 0) f.terms[{}] = value;
    return f;
}

void ps_add_term(PowerSumPolynomial& f, const Partition& alpha, const Rational& coeff) {
    for (int part : alpha)
        if (part < 2) throw std::invalid_argument("power sum factors need exponent >= 2");
    if (!is_valid_partition(alpha)) throw std::invalid_argument("term key must be a partition");
    auto it = f.terms.find(alpha);
    if (it == f.terms.end()) {
        if (coeff != 0) f.terms.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) f.terms.erase(it);
    }
}

PowerSumPolynomial ps_add(const PowerSumPolynomial& a, const PowerSumPolynomial& b) {
    PowerSumPolynomial r = a;
    for (const auto& [alpha, coeff] : b.terms) {
        auto it = r.terms.find(alpha);
        if (it == r.terms.end()) {
            r.terms.emplace(alpha, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

PowerSumPolynomial ps_scale(const PowerSumPolynomial& a, const Rational& s) {
    PowerSumPolynomial r;
    if (s == 0) return r;
    for (const auto& [alpha, coeff] : a.terms) r.terms.emplace(alpha, coeff * s);
    return r;
}

PowerSumPolynomial ps_mul(const PowerSumPolynomial& a, const PowerSumPolynomial& b,
                          int max_weight) {
    PowerSumPolynomial r;
    for (const auto& [alpha, ca] : a.terms) {
        int wa = partition_weight(alpha);
        for (const auto& [beta, cb] : b.terms) {
            if (max_weight >= 0 && wa + partition_weight(beta) > max_weight) continue;
            Partition merged;
            merged.reserve(alpha.size() + beta.size());
            std::merge(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                       std::back_inserter(merged), std::greater<int>());
            auto it = r.terms.find(merged);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(merged), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

PowerSumPolynomial ps_truncate(const PowerSumPolynomial& a, int max_weight) {
    PowerSumPolynomial r;
    for (const auto& [alpha, coeff] : a.terms)
        if (partition_weight(alpha) <= max_weight) r.terms.emplace(alpha, coeff);
    return r;
}

Rational evaluate_power_sum(const PowerSumPolynomial& f, const Distribution& p) {
    int max_part = 0;
    for (const auto& [alpha, coeff] : f.terms)
        if (!alpha.empty()) max_part = std::max(max_part, alpha[0]);
    // nu[m] = sum_i p_i^m, built by repeated multiplication
    std::vector<Rational> nu(max_part + 1, Rational(0));
    std::vector<Rational> powers(p.p.begin(), p.p.end());
    for (int m = 1; m <= max_part; ++m) {
        if (m > 1)
            for (int i = 0; i < p.size(); ++i) powers[i] *= p[i];
        Rational s = 0;
        for (const auto& x : powers) s += x;
        nu[m] = s;
    }
    Rational total = 0;
    for (const auto& [alpha, coeff] : f.terms) {
        Rational term = coeff;
        for (int part : alpha) term *= nu[part];
        total += term;
    }
    return total;
}

}  // namespace chromaprob
