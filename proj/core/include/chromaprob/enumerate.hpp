#pragma once

#include <functional>
#include <string>

#include "chromaprob/graph.hpp"
#include "chromaprob/random_util.hpp"

namespace chromaprob {

// unordered-pair bitmask of a graph on up to 16 vertices
using EdgeMask = unsigned __int128;

int pair_slot(int n, int u, int v);
EdgeMask edge_mask_of(const Graph& g);
Graph graph_from_edge_mask(int n, EdgeMask mask);

// relabeling-invariant key: vertices are partitioned by iterated degree
// refinement, then the edge mask is minimized over partition-preserving
// permutations; two graphs get equal keys exactly when isomorphic
std::string canonical_key(const Graph& g);

struct GraphClassOptions {
    bool connected_only = false;
    int max_degree = -1;  // -1: unbounded
    // -1: either; 1: claw-free only; 0: only graphs containing an induced claw
    int claw_free = -1;
};

// invokes fn once per isomorphism class of graphs on exactly n labeled vertices
// passing the filters; representatives arrive in a deterministic order
void for_each_graph_class(int n, const GraphClassOptions& options,
                          const std::function<void(const Graph&)>& fn);

// every unordered pair becomes an edge independently with the given probability
Graph random_graph(Rng& rng, int n, double edge_prob);

}  // namespace chromaprob
