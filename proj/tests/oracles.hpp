#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here favors transparency over speed so the library's shortcuts can be
// checked against definitions.

#include <cstdint>
#include <utility>
#include <vector>

#include "chromaprob/distribution.hpp"
#include "chromaprob/graph.hpp"
#include "chromaprob/polynomial.hpp"
#include "chromaprob/rational.hpp"

namespace oracles {

using chromaprob::Distribution;
using chromaprob::Graph;
using chromaprob::Int;
using chromaprob::Rational;

// calls fn(color) for every assignment of q colors to n vertices
template <typename Fn>
void for_each_coloring(int n, int q, Fn&& fn) {
    std::vector<int> color(n, 0);
    while (true) {
        fn(color);
        int i = 0;
        while (i < n && ++color[i] == q) color[i++] = 0;
        if (i == n) break;
    }
}

inline bool is_proper(const Graph& g, const std::vector<int>& color) {
    for (auto [u, v] : g.edges)
        if (color[u] == color[v]) return false;
    return true;
}

inline int mono_edge_count(const Graph& g, const std::vector<int>& color) {
    int count = 0;
    for (auto [u, v] : g.edges)
        if (color[u] == color[v]) ++count;
    return count;
}

inline Rational coloring_weight(const Distribution& p, const std::vector<int>& color) {
    Rational w(1);
    for (int c : color) w *= p[c];
    return w;
}

inline Int count_proper_colorings(const Graph& g, int q) {
    Int total = 0;
    for_each_coloring(g.n, q, [&](const std::vector<int>& color) {
        if (is_proper(g, color)) ++total;
    });
    return total;
}

inline Rational proper_probability(const Graph& g, const Distribution& p) {
    Rational total(0);
    for_each_coloring(g.n, p.size(), [&](const std::vector<int>& color) {
        if (is_proper(g, color)) total += coloring_weight(p, color);
    });
    return total;
}

// law of the monochromatic edge count; index k holds P(exactly k)
inline std::vector<Rational> mono_edge_pmf(const Graph& g, const Distribution& p) {
    std::vector<Rational> pmf(g.edge_count() + 1, Rational(0));
    for_each_coloring(g.n, p.size(), [&](const std::vector<int>& color) {
        pmf[mono_edge_count(g, color)] += coloring_weight(p, color);
    });
    return pmf;
}

// chromatic polynomial by inclusion-exclusion over edge subsets:
// sum over subsets of (-1)^|S| q^{components(S)}, coefficients low to high
inline chromaprob::UnivariatePolynomial chromatic_by_edge_subsets(const Graph& g) {
    int m = g.edge_count();
    std::vector<Int> coeff(g.n + 1, Int(0));
    std::vector<int> parent(g.n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        for (int v = 0; v < g.n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int comps = g.n;
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        coeff[comps] += (__builtin_popcountll(subset) % 2 == 0) ? 1 : -1;
    }
    chromaprob::UnivariatePolynomial poly;
    poly.c = coeff;
    while (!poly.c.empty() && poly.c.back() == 0) poly.c.pop_back();
    return poly;
}

// spanning trees by testing every (n-1)-edge subset for acyclic connectivity
inline Int spanning_trees_by_subsets(const Graph& g) {
    int m = g.edge_count();
    int need = g.n - 1;
    if (need < 0) return 0;
    if (need > m) return 0;
    Int total = 0;
    std::vector<int> parent(g.n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        if (__builtin_popcountll(subset) != need) continue;
        for (int v = 0; v < g.n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int e = 0; e < m && acyclic; ++e) {
            if (!((subset >> e) & 1)) continue;
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (acyclic) ++total;
    }
    return total;
}

// probability that n independent draws from p land on pairwise distinct values
inline Rational all_distinct_probability(int n, const Distribution& p) {
    if (n > p.size()) return Rational(0);
    Rational total(0);
    std::vector<int> pick;
    std::vector<bool> used(p.size(), false);
    auto rec = [&](auto&& self, Rational weight) -> void {
        if ((int)pick.size() == n) {
            total += weight;
            return;
        }
        for (int c = 0; c < p.size(); ++c) {
            if (used[c]) continue;
            used[c] = true;
            pick.push_back(c);
            self(self, weight * p[c]);
            pick.pop_back();
            used[c] = false;
        }
    };
    rec(rec, Rational(1));
    return total;
}

// every distribution over q colors whose entries share one of the
// denominators 1..max_denominator
inline std::vector<Distribution> grid_distributions(int q, int max_denominator) {
    std::vector<Distribution> out;
    std::vector<Rational> entries(q);
    for (int d = 1; d <= max_denominator; ++d) {
        auto rec = [&](auto&& self, int index, int remaining) -> void {
            if (index == q - 1) {
                entries[index] = Rational(remaining, d);
                out.push_back(chromaprob::make_distribution(entries));
                return;
            }
            for (int take = 0; take <= remaining; ++take) {
                entries[index] = Rational(take, d);
                self(self, index + 1, remaining - take);
            }
        };
        rec(rec, 0, d);
    }
    return out;
}

}  // namespace oracles
