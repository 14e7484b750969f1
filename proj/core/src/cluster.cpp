#include "chromaprob/cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace chromaprob {

Rational t_n_delta(int n, int delta) {
    if (delta < 2) throw std::invalid_argument("degree bound must be at least 2");
    if (n < 1) throw std::invalid_argument("tree size must be at least 1");
    long long top = (long long)(delta - 1) * (n + 1);
    long long bottom = (long long)(delta - 2) * n + delta;
    if (top > 200000) throw resource_limit_error("tree bound: factorial argument too large");
    return Rational(delta) * Rational(factorial((unsigned long)top),
                                      factorial((unsigned long)n) *
                                          factorial((unsigned long)bottom));
}

PenroseReport penrose_check(const Graph& g, int max_edges) {
    if (!is_connected(g)) throw std::invalid_argument("signed sweep needs a connected graph");
    int m = g.edge_count();
    if (m > max_edges || m > 30)
        throw resource_limit_error("signed sweep: too many edges");
    long long signed_sum = 0;
    std::vector<int> parent(g.n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        for (int v = 0; v < g.n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        int merges = 0;
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a != b) {
                parent[b] = a;
                ++merges;
            }
        }
        if (merges == g.n - 1)
            signed_sum += (__builtin_popcountll(subset) % 2 == 0) ? 1 : -1;
    }
    PenroseReport report;
    report.signed_sum = signed_sum;
    report.trees = spanning_tree_count(g);
    report.holds = abs(report.signed_sum) <= report.trees;
    return report;
}

PowerSumPolynomial mayer_log_expansion(const Graph& g, int m_max) {
    if (m_max < 2) throw std::invalid_argument("weight cutoff must be at least 2");
    if (m_max > 12) throw resource_limit_error("log expansion: weight cutoff too large");
    PowerSumPolynomial u = power_sum_form(g);
    u.terms.erase(Partition{});
    PowerSumPolynomial log_form;
    PowerSumPolynomial power = ps_constant(1);
    for (int k = 1; 2 * k <= m_max; ++k) {
        power = ps_mul(power, u, m_max);
        log_form = ps_add(log_form, ps_scale(power, Rational(k % 2 == 1 ? 1 : -1, k)));
    }
    return log_form;
}

CoefficientBoundReport coefficient_bound_report(const Graph& g, int m_max,
                                                const Rational& k_constant) {
    int delta = max_degree(g);
    CoefficientBoundReport report;
    report.in_stated_regime = delta >= 2;
    PowerSumPolynomial log_form = mayer_log_expansion(g, m_max);
    for (const auto& [alpha, coeff] : log_form.terms) {
        CoefficientBoundRow row;
        row.alpha = alpha;
        row.coefficient = coeff;
        int weight = partition_weight(alpha);
        int parts = (int)alpha.size();
        row.bound = Rational(4 * g.edge_count(), 5) *
                    rat_pow(k_constant * delta, weight - parts);
        row.within = abs(coeff) <= row.bound;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

// signed count of connected spanning edge subsets of the graph induced on
// the given vertices
long long spanning_connected_signed_sum(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = (int)i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    int m = (int)edges.size();
    int k = (int)vertices.size();
    if (m > 24) throw resource_limit_error("polymer weight: induced subgraph too dense");
    long long total = 0;
    std::vector<int> parent(k);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        for (int v = 0; v < k; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        int merges = 0;
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a != b) {
                parent[b] = a;
                ++merges;
            }
        }
        if (merges == k - 1)
            total += (__builtin_popcountll(subset) % 2 == 0) ? 1 : -1;
    }
    return total;
}

void validate_polymer_system(const PolymerSystem& system) {
    std::size_t n = system.polymers.size();
    if (system.conflict.size() != n)
        throw std::invalid_argument("conflict matrix size does not match polymer count");
    for (std::size_t i = 0; i < n; ++i) {
        if (system.conflict[i].size() != n)
            throw std::invalid_argument("conflict matrix is not square");
        if (!system.conflict[i][i])
            throw std::invalid_argument("every polymer must conflict with itself");
        for (std::size_t j = 0; j < n; ++j)
            if (system.conflict[i][j] != system.conflict[j][i])
                throw std::invalid_argument("conflict matrix must be symmetric");
    }
}

}  // namespace

PolymerSystem graph_polymer_system(const Graph& g, const Distribution& p) {
    if (g.n > 16) throw resource_limit_error("polymer system: too many vertices");
    std::vector<Rational> nu(g.n + 1, Rational(0));
    std::vector<Rational> powers(p.size());
    for (int i = 0; i < p.size(); ++i) powers[i] = p[i];
    for (int m = 2; m <= g.n; ++m) {
        Rational total = 0;
        for (int i = 0; i < p.size(); ++i) {
            powers[i] *= p[i];
            total += powers[i];
        }
        nu[m] = total;
    }
    PolymerSystem system;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> vertices;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) vertices.push_back(v);
        Graph induced = induced_subgraph(g, vertices);
        if (!is_connected(induced)) continue;
        long long signed_sum = spanning_connected_signed_sum(g, vertices);
        Polymer polymer;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i) polymer.id += ',';
            polymer.id += std::to_string(vertices[i]);
        }
        polymer.weight = nu[(int)vertices.size()] * signed_sum;
        system.polymers.push_back(std::move(polymer));
        masks.push_back(mask);
    }
    std::size_t n = system.polymers.size();
    system.conflict.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            system.conflict[i][j] = (masks[i] & masks[j]) != 0;
    return system;
}

Rational polymer_partition_function(const PolymerSystem& system) {
    validate_polymer_system(system);
    int n = (int)system.polymers.size();
    if (n > 32) throw resource_limit_error("partition function: too many polymers");
    std::vector<std::uint64_t> conflict_mask(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (system.conflict[i][j]) conflict_mask[i] |= 1ULL << j;
    std::unordered_map<std::uint64_t, Rational> memo;
    auto rec = [&](auto&& self, std::uint64_t allowed) -> Rational {
        if (allowed == 0) return 1;
        auto it = memo.find(allowed);
        if (it != memo.end()) return it->second;
        if (memo.size() > 4'000'000)
            throw resource_limit_error("partition function: state space too large");
        int v = std::countr_zero(allowed);
        Rational z = self(self, allowed & ~(1ULL << v)) +
                     system.polymers[v].weight * self(self, allowed & ~conflict_mask[v]);
        memo.emplace(allowed, z);
        return z;
    };
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    return rec(rec, all);
}

bool kotecky_preiss_holds(const PolymerSystem& system, const std::vector<double>& c) {
    validate_polymer_system(system);
    std::size_t n = system.polymers.size();
    if (c.size() != n) throw std::invalid_argument("one rate per polymer required");
    for (double x : c)
        if (!(x > 0)) throw std::invalid_argument("rates must be positive");
    for (std::size_t x = 0; x < n; ++x) {
        long double neighbor_sum = 0;
        for (std::size_t y = 0; y < n; ++y)
            if (system.conflict[x][y]) neighbor_sum += c[y];
        long double lhs = fabsl((long double)rational_to_double(system.polymers[x].weight));
        if (lhs > c[x] * expl(-neighbor_sum)) return false;
    }
    return true;
}

Int threshold_q_main(int delta) {
    if (delta < 1) throw std::invalid_argument("degree must be at least 1");
    return Int(630000) * int_pow(Int(delta), 4) + 1;
}

Int threshold_q_shameful(int delta) {
    if (delta < 1) throw std::invalid_argument("degree must be at least 1");
    Int squared = Int(160000) * int_pow(Int(delta), 3);
    return boost::multiprecision::sqrt(squared) + 1;
}

Int threshold_q_nonvanishing(int delta) {
    if (delta < 1) throw std::invalid_argument("degree must be at least 1");
    Rational bound = Rational(4) * Rational(7963907, 1000000) * Rational(7963907, 1000000) *
                     int_pow(Int(delta), 3);
    return least_integer_above(bound);
}

}  // namespace chromaprob
