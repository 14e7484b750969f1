#pragma once

#include "chromaprob/coloring_prob.hpp"

namespace chromaprob {

// exact law of the number of monochromatic edges under an independent
// coloring; pmf is indexed 0..|E|
struct EdgeCountDistribution {
    std::vector<Rational> pmf;
    Rational cumulative(int k) const;
};

// all colorings (proper or not) bucketed by monochromatic edge count and
// sorted color-usage profile
struct MonoJointTable {
    int n = 0;
    int q = 0;
    int edge_count = 0;
    std::map<std::pair<int, Partition>, Int> counts;
};

// threads > 1 splits the two-color sweep; results are identical either way
MonoJointTable build_mono_joint_table(const Graph& g, int q,
                                      long long max_states = kDefaultMaxStates,
                                      int threads = 1);

EdgeCountDistribution mono_edge_distribution(const Graph& g, const Distribution& p,
                                             long long max_states = kDefaultMaxStates,
                                             int threads = 1);

// probability of at most k monochromatic edges
Rational at_most_k_probability(const Graph& g, const Distribution& p, int k,
                               long long max_states = kDefaultMaxStates, int threads = 1);

// S_t: two-color weight of the split with t vertices on the first color,
// both color orders included
Rational complete_split_term(int n, int t, const Rational& p1);
// A_k: probability that a two-colored complete graph on n vertices has at
// most k monochromatic edges, assembled from admissible split terms; the
// balanced split of an even n contributes once
Rational complete_at_most_k(int n, const Rational& p1, int k);

// N(s,r): two-colorings of the n-vertex path with s vertices on one color
// and exactly r bichromatic adjacent pairs
Int chain_split_count(int n, int s, int r);

struct ConcaveMonotoneReport {
    bool holds = true;
    // on failure, growing the smaller color class from witness_s to
    // witness_s + 1 lowers the at-most-witness_c probability
    int witness_s = -1;
    int witness_c = -1;
};
// two-color check: among colorings with exactly s vertices on the first
// color, the chance of at most c monochromatic edges must not decrease as s
// moves toward the balanced split
ConcaveMonotoneReport concave_monotone_check(const Graph& g,
                                             long long max_states = kDefaultMaxStates);

struct UniformScanReport {
    bool is_uniform_max_on_grid = true;
    Distribution best_point;
    Rational best_value;
    Rational uniform_value;
};
// evaluates the at-most-k probability on every distribution with the given
// common denominator and compares the best grid point against uniform
UniformScanReport p_uniform_scan(const Graph& g, int q, int k, int grid_denominator,
                                 long long max_states = kDefaultMaxStates, int threads = 1);

}  // namespace chromaprob
