#include "chromaprob/mono_tolerance.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace chromaprob {

Rational EdgeCountDistribution::cumulative(int k) const {
    Rational total = 0;
    for (int j = 0; j <= k && j < (int)pmf.size(); ++j) total += pmf[j];
    return total;
}

namespace {

Partition two_color_profile(int a, int n) {
    Partition profile;
    if (std::max(a, n - a) > 0) profile.push_back(std::max(a, n - a));
    if (std::min(a, n - a) > 0) profile.push_back(std::min(a, n - a));
    return profile;
}

MonoJointTable two_color_joint_table(const Graph& g, long long max_states, int threads) {
    if (g.n >= 63 || (1LL << g.n) > max_states)
        throw resource_limit_error("mono edge table: two-color sweep too large");
    MonoJointTable table;
    table.n = g.n;
    table.q = 2;
    table.edge_count = g.edge_count();
    int m = g.edge_count();
    const unsigned long long total = 1ULL << g.n;
    int workers = std::clamp(threads, 1, 64);
    if ((unsigned long long)workers > total) workers = (int)total;
    std::vector<std::map<std::pair<int, int>, long long>> partial(workers);
    auto sweep = [&](int worker) {
        auto& buckets = partial[worker];
        unsigned long long begin = total / workers * worker;
        unsigned long long end = worker + 1 == workers ? total : total / workers * (worker + 1);
        for (unsigned long long mask = begin; mask < end; ++mask) {
            int j = 0;
            for (int e = 0; e < m; ++e) {
                auto [u, v] = g.edges[e];
                if (((mask >> u) & 1) == ((mask >> v) & 1)) ++j;
            }
            buckets[{j, __builtin_popcountll(mask)}]++;
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& buckets : partial)
        for (const auto& [key, count] : buckets)
            table.counts[{key.first, two_color_profile(key.second, g.n)}] += count;
    return table;
}

MonoJointTable enumerate_joint_table(const Graph& g, int q, long long max_states) {
    MonoJointTable table;
    table.n = g.n;
    table.q = q;
    table.edge_count = g.edge_count();
    std::vector<std::vector<int>> earlier(g.n);
    for (auto [u, v] : g.edges) earlier[v].push_back(u);
    std::vector<int> color(g.n, -1);
    std::vector<int> usage(q, 0);
    long long nodes = 0;
    std::map<std::pair<int, Partition>, long long> buckets;
    auto rec = [&](auto&& self, int at, int mono) -> void {
        if (++nodes > max_states)
            throw resource_limit_error("mono edge table: state limit exceeded");
        if (at == g.n) {
            Partition profile = usage;
            std::sort(profile.begin(), profile.end(), std::greater<int>());
            while (!profile.empty() && profile.back() == 0) profile.pop_back();
            buckets[{mono, profile}]++;
            return;
        }
        for (int c = 0; c < q; ++c) {
            int delta = 0;
            for (int p : earlier[at])
                if (color[p] == c) ++delta;
            color[at] = c;
            usage[c]++;
            self(self, at + 1, mono + delta);
            usage[c]--;
        }
        color[at] = -1;
    };
    rec(rec, 0, 0);
    for (const auto& [key, count] : buckets) table.counts[key] = count;
    return table;
}

Rational table_cumulative(const MonoJointTable& table, const Distribution& p, int k) {
    Rational total = 0;
    for (const auto& [key, count] : table.counts) {
        if (key.first > k) continue;
        total += Rational(count, arrangement_count(key.second, table.q)) *
                 monomial_symmetric(key.second, p);
    }
    return total;
}

void ascending_compositions(int remaining, int parts, int min_part, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (remaining >= min_part) {
            cur.push_back(remaining);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (int a = min_part; a * parts <= remaining; ++a) {
        cur.push_back(a);
        ascending_compositions(remaining - a, parts - 1, a, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

MonoJointTable build_mono_joint_table(const Graph& g, int q, long long max_states,
                                      int threads) {
    if (q < 1 || q > 32)
        throw std::invalid_argument("mono edge table needs 1 <= q <= 32");
    if (q == 2) return two_color_joint_table(g, max_states, threads);
    return enumerate_joint_table(g, q, max_states);
}

EdgeCountDistribution mono_edge_distribution(const Graph& g, const Distribution& p,
                                             long long max_states, int threads) {
    MonoJointTable table = build_mono_joint_table(g, p.size(), max_states, threads);
    EdgeCountDistribution dist;
    dist.pmf.assign(table.edge_count + 1, Rational(0));
    for (const auto& [key, count] : table.counts)
        dist.pmf[key.first] += Rational(count, arrangement_count(key.second, table.q)) *
                               monomial_symmetric(key.second, p);
    return dist;
}

Rational at_most_k_probability(const Graph& g, const Distribution& p, int k,
                               long long max_states, int threads) {
    MonoJointTable table = build_mono_joint_table(g, p.size(), max_states, threads);
    return table_cumulative(table, p, k);
}

Rational complete_split_term(int n, int t, const Rational& p1) {
    if (n < 1) throw std::invalid_argument("split term needs n >= 1");
    if (t < 0 || 2 * t > n) throw std::invalid_argument("split size must satisfy 0 <= t <= n/2");
    if (p1 < 0 || p1 > 1) throw std::invalid_argument("p1 must lie in [0,1]");
    Rational p2 = Rational(1) - p1;
    return rat_pow(p1, t) * rat_pow(p2, n - t) + rat_pow(p2, t) * rat_pow(p1, n - t);
}

Rational complete_at_most_k(int n, const Rational& p1, int k) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    if (p1 < 0 || p1 > 1) throw std::invalid_argument("p1 must lie in [0,1]");
    if (k < 0) return 0;
    Rational p2 = Rational(1) - p1;
    Rational total = 0;
    for (int t = 0; 2 * t <= n; ++t) {
        Int mono = binomial(t, 2) + binomial(n - t, 2);
        if (mono > k) continue;
        if (2 * t == n)
            total += Rational(binomial(n, t)) * rat_pow(p1, t) * rat_pow(p2, t);
        else
            total += Rational(binomial(n, t)) * complete_split_term(n, t, p1);
    }
    return total;
}

Int chain_split_count(int n, int s, int r) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    if (s < 0 || 2 * s > n) throw std::invalid_argument("split size must satisfy 0 <= s <= n/2");
    if (r < 0 || r > n - 1) throw std::invalid_argument("change count must satisfy 0 <= r <= n-1");
    int t = n - s;
    if (r % 2 == 1) {
        int h = (r - 1) / 2;
        return 2 * binomial(s - 1, h) * binomial(t - 1, h);
    }
    int h = r / 2;
    if (r < 2 * s)
        return binomial(s - 1, h) * binomial(t - 1, h - 1) +
               binomial(t - 1, h) * binomial(s - 1, h - 1);
    if (r == 2 * s && s < t) return binomial(t - 1, h);
    return 0;
}

ConcaveMonotoneReport concave_monotone_check(const Graph& g, long long max_states) {
    if (g.n >= 63 || (1LL << g.n) > max_states)
        throw resource_limit_error("concave monotone check: sweep too large");
    int m = g.edge_count();
    std::vector<std::vector<long long>> count(g.n + 1, std::vector<long long>(m + 1, 0));
    for (unsigned long long mask = 0; mask < (1ULL << g.n); ++mask) {
        int j = 0;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges[e];
            if (((mask >> u) & 1) == ((mask >> v) & 1)) ++j;
        }
        count[__builtin_popcountll(mask)][j]++;
    }
    for (int a = 0; a <= g.n; ++a)
        for (int j = 1; j <= m; ++j) count[a][j] += count[a][j - 1];
    ConcaveMonotoneReport report;
    for (int c = 0; c <= m; ++c)
        for (int s = 0; 2 * (s + 1) <= g.n; ++s) {
            Int lhs = Int(count[s][c]) * binomial(g.n, s + 1);
            Int rhs = Int(count[s + 1][c]) * binomial(g.n, s);
            if (lhs > rhs) {
                report.holds = false;
                report.witness_s = s;
                report.witness_c = c;
                return report;
            }
        }
    return report;
}

UniformScanReport p_uniform_scan(const Graph& g, int q, int k, int grid_denominator,
                                 long long max_states, int threads) {
    if (q < 1) throw std::invalid_argument("palette size must be positive");
    if (grid_denominator < 1) throw std::invalid_argument("grid denominator must be positive");
    MonoJointTable table = build_mono_joint_table(g, q, max_states, threads);
    UniformScanReport report;
    report.uniform_value = table_cumulative(table, uniform_distribution(q), k);
    bool have_best = false;
    std::vector<int> cur;
    ascending_compositions(
        grid_denominator, q, 0, cur, [&](const std::vector<int>& parts) {
            std::vector<Rational> probs;
            probs.reserve(q);
            for (int a : parts) probs.emplace_back(a, grid_denominator);
            Distribution point = make_distribution(probs);
            Rational value = table_cumulative(table, point, k);
            if (!have_best || value > report.best_value) {
                have_best = true;
                report.best_value = value;
                report.best_point = point;
            }
        });
    report.is_uniform_max_on_grid = report.uniform_value >= report.best_value;
    return report;
}

}  // namespace chromaprob
