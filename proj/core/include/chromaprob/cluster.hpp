#pragma once

#include <string>

#include "chromaprob/coloring_prob.hpp"

namespace chromaprob {

// the factorial bound on spanning-tree counts of connected graphs with
// maximum degree delta
Rational t_n_delta(int n, int delta);

struct PenroseReport {
    Int signed_sum = 0;
    Int trees = 0;
    bool holds = false;
};
// compares the signed count of connected spanning edge subsets against the
// spanning-tree count
PenroseReport penrose_check(const Graph& g, int max_edges = 24);

// truncated formal logarithm of the power-sum form, graded by total weight
PowerSumPolynomial mayer_log_expansion(const Graph& g, int m_max);

struct CoefficientBoundRow {
    Partition alpha;
    Rational coefficient;
    Rational bound;
    bool within = false;
};
struct CoefficientBoundReport {
    // the bound's constants are stated for maximum degree at least 2
    bool in_stated_regime = true;
    std::vector<CoefficientBoundRow> rows;
};
CoefficientBoundReport coefficient_bound_report(
    const Graph& g, int m_max, const Rational& k_constant = Rational(7963907, 1000000));

struct Polymer {
    std::string id;
    Rational weight;
};
// conflict is symmetric and reflexive; an independent collection may contain
// at most one of any conflicting pair
struct PolymerSystem {
    std::vector<Polymer> polymers;
    std::vector<std::vector<bool>> conflict;
};

// polymers are the connected vertex subsets of size >= 2; the weight couples
// the palette's power sum with a signed count of connected spanning subgraphs
PolymerSystem graph_polymer_system(const Graph& g, const Distribution& p);

// sum over conflict-free polymer subsets of the product of weights
Rational polymer_partition_function(const PolymerSystem& system);

// checks |w_x| <= c_x exp(-sum of c_y over polymers conflicting with x) for
// every polymer; evaluated in extended double precision
bool kotecky_preiss_holds(const PolymerSystem& system, const std::vector<double>& c);

// smallest q strictly above 630000 delta^4
Int threshold_q_main(int delta);
// smallest q strictly above 400 delta^(3/2)
Int threshold_q_shameful(int delta);
// smallest q strictly above 4 K^2 delta^3 with K = 7.963907
Int threshold_q_nonvanishing(int delta);

}  // namespace chromaprob
