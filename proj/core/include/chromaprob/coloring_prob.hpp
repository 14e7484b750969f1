#pragma once

#include "chromaprob/chromatic.hpp"
#include "chromaprob/distribution.hpp"
#include "chromaprob/graph.hpp"
#include "chromaprob/partition.hpp"
#include "chromaprob/power_sum.hpp"

namespace chromaprob {

// proper colorings of a graph bucketed by sorted color-usage profile;
// evaluating the bucket counts against any palette distribution gives the
// probability that an independently drawn coloring is proper
struct ProfileTable {
    int n = 0;
    int q = 0;
    std::map<Partition, Int, PartitionOrder> counts;
};

ProfileTable build_profile_table(const Graph& g, int q,
                                 long long max_states = kDefaultMaxStates);
Rational evaluate_profile_table(const ProfileTable& table, const Distribution& p);
double evaluate_profile_table(const ProfileTable& table, const std::vector<double>& p);

// m_lambda(p): sum of distinct monomials with exponent multiset lambda
Rational monomial_symmetric(const Partition& lambda, const Distribution& p);
double monomial_symmetric(const Partition& lambda, const std::vector<double>& p);

// probability that a random coloring (vertex colors independent with law p)
// is proper; exact
Rational proper_probability(const Graph& g, const Distribution& p,
                            long long max_states = kDefaultMaxStates);

// signed edge-subset expansion of the proper-coloring probability in the
// power sums nu(m); independent of the palette size
PowerSumPolynomial power_sum_form(const Graph& g, int max_edges = 24);

// probability that n independent draws from p are pairwise distinct: n! e_n(p)
Rational birthday_probability(int n, const Distribution& p);
// same probability for the uniform palette, computed as prod (1 - i/q)
Rational uniform_birthday_probability(int n, int q);
// smallest n whose all-distinct probability drops to the threshold or below
int minimal_birthday_n(int q, const Rational& threshold);

// star K_{1,n}: sum_i p_i (1 - p_i)^n
Rational star_closed_form(int n, const Distribution& p);

// two-color proper probability of the depth-2k binary-branching tree
Rational ternary_tree_closed_form(int k, const Rational& p1);
// vertices on even and odd depths of that tree
std::pair<long long, long long> ternary_tree_layer_counts(int k);

}  // namespace chromaprob
