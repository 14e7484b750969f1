#pragma once

#include "chromaprob/coloring_prob.hpp"

namespace chromaprob {

// symmetric polynomial in q variables stored on the monomial basis
struct SymmetricPolynomial {
    int q = 0;
    std::map<Partition, Rational, PartitionOrder> terms;
};

SymmetricPolynomial sym_zero(int q);
// adds coeff * m_lambda, dropping the key when the total cancels
void sym_add_term(SymmetricPolynomial& f, const Partition& lambda, const Rational& coeff);
SymmetricPolynomial sym_add(const SymmetricPolynomial& a, const SymmetricPolynomial& b);
SymmetricPolynomial sym_scale(const SymmetricPolynomial& a, const Rational& s);
SymmetricPolynomial sym_mul(const SymmetricPolynomial& a, const SymmetricPolynomial& b);

// m_lambda as a polynomial; zero when lambda has more than q parts
SymmetricPolynomial monomial_basis_element(const Partition& lambda, int q);
// e_k; zero when k exceeds q
SymmetricPolynomial elementary_power(int k, int q);
// e_lambda = product of e over the parts
SymmetricPolynomial elementary_product(const Partition& lambda, int q);

// proper colorings graded by color usage; evaluating at a distribution gives
// the proper-coloring probability and evaluating at all-ones counts colorings
SymmetricPolynomial chromatic_symmetric_function(const Graph& g, int q,
                                                 long long max_states = kDefaultMaxStates);

Rational evaluate_symmetric(const SymmetricPolynomial& f, const Distribution& p);

// largest homogeneous degree appearing in f; the elementary basis expansion
// needs at least this many variables
int max_degree(const SymmetricPolynomial& f);

// coefficients c_lambda with f = sum c_lambda e_lambda, solved degree by
// degree with exact elimination
std::map<Partition, Rational, PartitionOrder> elementary_basis(const SymmetricPolynomial& f);
bool is_e_positive(const SymmetricPolynomial& f);

// s_lambda via semistandard tableau enumeration with entries bounded by q
SymmetricPolynomial schur_function(const Partition& lambda, int q);

}  // namespace chromaprob
