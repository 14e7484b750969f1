#include "chromaprob/coloring_prob.hpp"

#include <algorithm>
#include <queue>

namespace chromaprob {

namespace {

std::vector<int> global_backtrack_order(const Graph& g) {
    std::vector<int> order;
    order.reserve(g.n);
    for (const auto& comp : connected_components(g)) {
        int start = comp[0];
        for (int v : comp)
            if (g.degree(v) > g.degree(start)) start = v;
        std::vector<bool> seen(g.n, false);
        std::queue<int> bfs;
        bfs.push(start);
        seen[start] = true;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            order.push_back(u);
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    bfs.push(w);
                }
        }
    }
    return order;
}

}  // namespace

ProfileTable build_profile_table(const Graph& g, int q, long long max_states) {
    if (q < 1 || q > 32) throw std::invalid_argument("profile table needs 1 <= q <= 32");
    ProfileTable table;
    table.n = g.n;
    table.q = q;
    std::vector<int> order = global_backtrack_order(g);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> earlier(g.n);
    for (auto [u, v] : g.edges) {
        int pu = pos[u], pv = pos[v];
        if (pu > pv) std::swap(pu, pv);
        earlier[pv].push_back(pu);
    }
    std::vector<int> color(g.n, -1);
    std::vector<int> usage(q, 0);
    long long nodes = 0;
    std::map<std::vector<int>, long long> buckets;
    auto rec = [&](auto&& self, int at) -> void {
        if (++nodes > max_states)
            throw resource_limit_error("profile table: state limit exceeded");
        if (at == g.n) {
            std::vector<int> profile = usage;
            std::sort(profile.begin(), profile.end(), std::greater<int>());
            while (!profile.empty() && profile.back() == 0) profile.pop_back();
            buckets[profile]++;
            return;
        }
        std::uint32_t forbidden = 0;
        for (int p : earlier[at]) forbidden |= 1u << color[p];
        for (int c = 0; c < q; ++c) {
            if ((forbidden >> c) & 1) continue;
            color[at] = c;
            usage[c]++;
            self(self, at + 1);
            usage[c]--;
        }
        color[at] = -1;
    };
    rec(rec, 0);
    for (auto& [profile, count] : buckets) table.counts[profile] = count;
    return table;
}

Rational monomial_symmetric(const Partition& lambda, const Distribution& p) {
    if ((int)lambda.size() > p.size()) return 0;
    std::vector<int> expo(p.size(), 0);
    std::copy(lambda.begin(), lambda.end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (int i = 0; i < p.size(); ++i)
            if (expo[i] > 0) term *= rat_pow(p[i], expo[i]);
        total += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return total;
}

double monomial_symmetric(const Partition& lambda, const std::vector<double>& p) {
    if (lambda.size() > p.size()) return 0;
    std::vector<int> expo(p.size(), 0);
    std::copy(lambda.begin(), lambda.end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    double total = 0;
    do {
        double term = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int e = 0; e < expo[i]; ++e) term *= p[i];
        total += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return total;
}

Rational evaluate_profile_table(const ProfileTable& table, const Distribution& p) {
    if (p.size() != table.q)
        throw std::invalid_argument("distribution size does not match table palette");
    Rational total = 0;
    // bucket counts cover every rearrangement of the profile, so scale the
    // monomial symmetric sum by count / #rearrangements
    for (const auto& [lambda, count] : table.counts)
        total += Rational(count, arrangement_count(lambda, table.q)) *
                 monomial_symmetric(lambda, p);
    return total;
}

double evaluate_profile_table(const ProfileTable& table, const std::vector<double>& p) {
    if ((int)p.size() != table.q)
        throw std::invalid_argument("point size does not match table palette");
    double total = 0;
    for (const auto& [lambda, count] : table.counts)
        total += rational_to_double(Rational(count, arrangement_count(lambda, table.q))) *
                 monomial_symmetric(lambda, p);
    return total;
}

Rational proper_probability(const Graph& g, const Distribution& p, long long max_states) {
    if (g.n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (is_uniform(p)) {
        try {
            return uniform_proper_probability(g, p.size(), max_states);
        } catch (const resource_limit_error&) {
        }
    }
    if (p.size() <= 32) {
        try {
            return evaluate_profile_table(build_profile_table(g, p.size(), max_states), p);
        } catch (const resource_limit_error&) {
        }
    }
    if (g.edge_count() <= 24) return evaluate_power_sum(power_sum_form(g), p);
    throw resource_limit_error("proper probability: instance too large for exact evaluation");
}

PowerSumPolynomial power_sum_form(const Graph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges || m > 30)
        throw resource_limit_error("power sum form: too many edges for subset sweep");
    std::map<Partition, long long> acc;
    std::vector<int> parent(g.n), size(g.n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        for (int v = 0; v < g.n; ++v) {
            parent[v] = v;
            size[v] = 1;
        }
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a != b) {
                if (size[a] < size[b]) std::swap(a, b);
                parent[b] = a;
                size[a] += size[b];
            }
        }
        std::vector<int> comp_sizes;
        for (int v = 0; v < g.n; ++v)
            if (find(v) == v && size[v] >= 2) comp_sizes.push_back(size[v]);
        std::sort(comp_sizes.begin(), comp_sizes.end(), std::greater<int>());
        acc[comp_sizes] += (__builtin_popcountll(subset) % 2 == 0) ? 1 : -1;
    }
    PowerSumPolynomial f;
    for (const auto& [alpha, coeff] : acc)
        if (coeff != 0) f.terms.emplace(alpha, Rational(coeff));
    return f;
}

Rational birthday_probability(int n, const Distribution& p) {
    if (n < 0) throw std::invalid_argument("draw count must be nonnegative");
    if (n == 0) return 1;
    if (n > p.size()) return 0;
    // elementary symmetric prefix recurrence: e_j after adding p_i
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (int i = 0; i < p.size(); ++i)
        for (int j = std::min(n, i + 1); j >= 1; --j) e[j] += p[i] * e[j - 1];
    return Rational(factorial(n)) * e[n];
}

Rational uniform_birthday_probability(int n, int q) {
    if (n < 0) throw std::invalid_argument("draw count must be nonnegative");
    if (q < 1) throw std::invalid_argument("palette size must be positive");
    Rational prob = 1;
    for (int i = 1; i < n; ++i) {
        prob *= Rational(q - i, q);
        if (prob == 0) break;
    }
    return prob;
}

int minimal_birthday_n(int q, const Rational& threshold) {
    if (q < 1) throw std::invalid_argument("palette size must be positive");
    if (threshold < 0) throw std::invalid_argument("threshold must be nonnegative");
    Rational prob = 1;
    for (int n = 1;; ++n) {
        if (prob <= threshold) return n;
        prob *= Rational(std::max(q - n, 0), q);
    }
}

Rational star_closed_form(int n, const Distribution& p) {
    if (n < 1) throw std::invalid_argument("star closed form needs n >= 1 leaves");
    Rational total = 0;
    for (int i = 0; i < p.size(); ++i) total += p[i] * rat_pow(Rational(1) - p[i], n);
    return total;
}

std::pair<long long, long long> ternary_tree_layer_counts(int k) {
    if (k < 1 || k > 14) throw std::invalid_argument("tree depth parameter must be in 1..14");
    long long even = 0, odd = 0;
    for (int depth = 0; depth <= 2 * k; ++depth)
        (depth % 2 == 0 ? even : odd) += 1LL << depth;
    return {even, odd};
}

Rational ternary_tree_closed_form(int k, const Rational& p1) {
    if (p1 < 0 || p1 > 1) throw std::invalid_argument("p1 must lie in [0,1]");
    auto [even, odd] = ternary_tree_layer_counts(k);
    if (even > 100000) throw resource_limit_error("tree too deep for exact powers");
    Rational p2 = Rational(1) - p1;
    return rat_pow(p1, even) * rat_pow(p2, odd) + rat_pow(p2, even) * rat_pow(p1, odd);
}

}  // namespace chromaprob
