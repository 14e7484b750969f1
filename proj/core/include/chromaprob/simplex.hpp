#pragma once

#include <functional>

#include "chromaprob/coloring_prob.hpp"

namespace chromaprob {

// standard majorization: equal totals and every prefix sum of the descending
// rearrangement of v dominates that of w
bool majorizes(const Distribution& v, const Distribution& w);

// moves coordinates i and j toward their mean by fraction t; the result is
// majorized by the input
Distribution pinch(const Distribution& p, int i, int j, const Rational& t);

struct SchurScanReport {
    bool holds_on_samples = true;
    // populated on violation: `point` majorizes `pinched` yet scores higher
    Distribution point;
    Distribution pinched;
    Rational point_value;
    Rational pinched_value;
};
// randomized Schur concavity check of the proper-coloring probability:
// pinching (and more generally moving down the majorization order) must not
// decrease the probability; every comparison is exact
SchurScanReport schur_concavity_scan(const Graph& g, int q, int samples,
                                     unsigned long long seed,
                                     long long max_states = kDefaultMaxStates);

// Euclidean projection onto the probability simplex (sorting method)
std::vector<double> project_to_simplex(const std::vector<double>& x);

using Objective = std::function<double(const std::vector<double>&)>;

struct MaximizeResult {
    std::vector<double> argmax;
    double value = 0.0;
    bool converged = false;
};
// multi-start projected gradient ascent with central finite differences;
// deterministic across runs for a fixed restart count
MaximizeResult maximize_over_simplex(const Objective& objective, int q, int restarts = 16,
                                     double tolerance = 1e-10);

// true when some coordinate satisfies p_i^2 q >= 4 max_degree
bool step1_condition_holds(const Graph& g, int q, const Distribution& p);

struct Step1Report {
    bool holds_on_samples = true;
    int trials_run = 0;
    bool counterexample_found = false;
    Distribution counterexample;
};
// samples distributions with one provably large coordinate and checks that
// none scores above the uniform distribution
Step1Report step1_empirical_check(const Graph& g, int q, int trials,
                                  unsigned long long seed);

// moment-growth region: sum_i z_i^m <= (4 delta / q)^{(m-1)/2} for m = 1..m_max
bool omega_membership(const std::vector<Rational>& z_moduli, int delta, int q, int m_max);
// coordinate box: every p_i^2 q <= 4 delta
bool omega1_membership(const std::vector<Rational>& p, int delta, int q);
// samples simplex points inside the coordinate box and verifies each lies in
// the moment-growth region
bool omega1_subset_omega(int delta, int q, int samples,
                         unsigned long long seed = 20240501ULL, int m_max = 16);

}  // namespace chromaprob
