#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromaprob/rational.hpp"

namespace chromaprob {

// simple undirected graph on vertices 0..n-1; edges normalized to u < v,
// sorted lexicographically, duplicates collapsed at construction
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int vertex_count() const { return n; }
    int edge_count() const { return (int)edges.size(); }
    int degree(int v) const { return (int)adj[v].size(); }
    bool has_edge(int u, int v) const;
};

Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}: center is vertex 0
Graph complete_bipartite_graph(int a, int b);
// rooted tree where the root has two children and every internal vertex has
// two children, grown to depth 2k; vertices labeled in breadth-first order
Graph ternary_tree_graph(int k);
// 19-vertex witness graph: a 12-clique a0..a11 (labels 0..11), a 7-clique on
// {a6..a11, c} with c = 18, and pendant vertices b_i = 12+i attached to a_i
// for i = 0..5
Graph figure1_graph();

// accepts "complete:5", "star:4", "figure1", "complete_bipartite:3:3", ...
Graph named_graph(const std::string& spec);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// color class per vertex (0/1) when bipartite
std::optional<std::vector<int>> bipartition(const Graph& g);
int max_degree(const Graph& g);
long long triangle_count(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_tree(const Graph& g);

// Kirchhoff count via fraction-free elimination of a Laplacian minor
Int spanning_tree_count(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph remove_edge(const Graph& g, int u, int v);
// merge v into u, drop loops, collapse parallels; vertices relabeled compactly
Graph contract_edge(const Graph& g, int u, int v);

// neighbor bitmask per vertex; requires n <= 64
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// text format: first line "n m", then m lines "u v"
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace chromaprob
