#pragma once

#include <map>

#include "chromaprob/distribution.hpp"
#include "chromaprob/partition.hpp"

namespace chromaprob {

// polynomial in the power sums nu(m) = sum_i p_i^m for m >= 2; the key lists
// the factors of one product term, so {} is the constant term and {3,2,2}
// stands for nu(3)nu(2)^2; nu(1) = 1 on the simplex and never appears
struct PowerSumPolynomial {
    std::map<Partition, Rational, PartitionOrder> terms;

    bool operator==(const PowerSumPolynomial& other) const { return terms == other.terms; }
};

PowerSumPolynomial ps_constant(const Rational& value);
void ps_add_term(PowerSumPolynomial& f, const Partition& alpha, const Rational& coeff);
PowerSumPolynomial ps_add(const PowerSumPolynomial& a, const PowerSumPolynomial& b);
PowerSumPolynomial ps_scale(const PowerSumPolynomial& a, const Rational& s);
// product, dropping terms whose total weight exceeds max_weight when given
PowerSumPolynomial ps_mul(const PowerSumPolynomial& a, const PowerSumPolynomial& b,
                          int max_weight = -1);
PowerSumPolynomial ps_truncate(const PowerSumPolynomial& a, int max_weight);

Rational evaluate_power_sum(const PowerSumPolynomial& f, const Distribution& p);

}  // namespace chromaprob
