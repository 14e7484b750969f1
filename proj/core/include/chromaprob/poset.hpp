#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromaprob/graph.hpp"
#include "chromaprob/random_util.hpp"

namespace chromaprob {

// finite poset on 0..n-1; leq[a][b] means a <= b; reflexive and transitively closed
struct Poset {
    int n = 0;
    std::vector<std::vector<bool>> leq;

    bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }
};

// relations may be covers or any subset of the order; the transitive closure is
// taken and antisymmetry validated afterwards
Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations);

// text format: first line "n k", then k lines "a b" meaning a <= b
Poset parse_poset(const std::string& text);

// edge between distinct elements exactly when they are incomparable
Graph incomparability_graph(const Poset& p);

// false iff some 3-element chain plus an element incomparable to all of it exists
bool is_3plus1_free(const Poset& p);

Poset random_poset(Rng& rng, int n, int relation_attempts);

}  // namespace chromaprob
