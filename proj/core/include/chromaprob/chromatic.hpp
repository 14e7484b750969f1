#pragma once

#include "chromaprob/graph.hpp"
#include "chromaprob/polynomial.hpp"
#include "chromaprob/rational.hpp"

namespace chromaprob {

inline constexpr long long kDefaultMaxStates = 1LL << 24;

// deletion-contraction with an isomorphism-keyed memo; complete graphs,
// forests and cycles short-circuit to closed forms
UnivariatePolynomial chromatic_polynomial(const Graph& g,
                                          long long max_states = kDefaultMaxStates);

// number of proper colorings with a fixed palette of q colors; picks between
// the polynomial route and direct backtracking counting depending on size
Int chromatic_eval(const Graph& g, const Int& q, long long max_states = kDefaultMaxStates);

// probability that a uniformly random q-coloring is proper
Rational uniform_proper_probability(const Graph& g, const Int& q,
                                    long long max_states = kDefaultMaxStates);

// expected number of colors, n(1 - chi(n-1)/chi(n)) with n the vertex count
Rational mean_colors(const Graph& g, long long max_states = kDefaultMaxStates);

// chi(q-1)/(q-1)^n <= chi(q)/q^n, compared exactly
bool shameful_ratio_monotone(const Graph& g, const Int& q,
                             long long max_states = kDefaultMaxStates);

}  // namespace chromaprob
