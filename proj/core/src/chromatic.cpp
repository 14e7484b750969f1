#include "chromaprob/chromatic.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "chromaprob/enumerate.hpp"

namespace chromaprob {

namespace {

bool is_complete_connected(const Graph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

bool is_cycle_connected(const Graph& g) {
    if (g.n < 3 || g.edge_count() != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

UnivariatePolynomial tree_poly(int n) {
    UnivariatePolynomial qm1;
    qm1.c = {Int(-1), Int(1)};
    return poly_mul(poly_monomial(1), poly_pow(qm1, n - 1));
}

UnivariatePolynomial cycle_poly(int n) {
    UnivariatePolynomial qm1;
    qm1.c = {Int(-1), Int(1)};
    UnivariatePolynomial p = poly_pow(qm1, n);
    UnivariatePolynomial tail = qm1;
    if (n % 2 == 1) tail = poly_sub(UnivariatePolynomial{}, qm1);
    return poly_add(p, tail);
}

struct DcContext {
    long long max_states;
    long long states = 0;
    std::unordered_map<std::string, UnivariatePolynomial> memo;

    void charge() {
        if (++states > max_states)
            throw resource_limit_error("chromatic polynomial: state limit exceeded");
    }
};

UnivariatePolynomial chromatic_rec(const Graph& g, DcContext& ctx);

UnivariatePolynomial chromatic_connected(const Graph& g, DcContext& ctx) {
    int n = g.n;
    if (g.edge_count() == 0) return poly_monomial(n);
    if (is_complete_connected(g)) return falling_factorial_poly(n);
    if (g.edge_count() == n - 1) return tree_poly(n);
    if (is_cycle_connected(g)) return cycle_poly(n);

    std::string key = canonical_key(g);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    ctx.charge();

    // contract the edge merging the most parallel edges away, lowest labels on ties
    std::pair<int, int> pick = g.edges.front();
    int best_common = -1;
    for (auto [u, v] : g.edges) {
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        int common = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else { ++common; ++i; ++j; }
        }
        if (common > best_common) {
            best_common = common;
            pick = {u, v};
        }
    }

    UnivariatePolynomial deleted = chromatic_rec(remove_edge(g, pick.first, pick.second), ctx);
    UnivariatePolynomial contracted = chromatic_rec(contract_edge(g, pick.first, pick.second), ctx);
    UnivariatePolynomial result = poly_sub(deleted, contracted);
    ctx.memo.emplace(std::move(key), result);
    return result;
}

UnivariatePolynomial chromatic_rec(const Graph& g, DcContext& ctx) {
    UnivariatePolynomial result = poly_constant(1);
    for (const auto& comp : connected_components(g))
        result = poly_mul(result, chromatic_connected(induced_subgraph(g, comp), ctx));
    return result;
}

// proper-coloring count by backtracking; palette sizes up to 32
Int count_colorings_backtracking(const Graph& g, int q, long long max_states) {
    Int total = 1;
    long long nodes = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            total *= q;
            continue;
        }
        Graph h = induced_subgraph(g, comp);
        int n = h.n;
        // breadth-first order from a maximum-degree vertex keeps constraints early
        int start = 0;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > h.degree(start)) start = v;
        std::vector<int> order;
        std::vector<bool> seen(n, false);
        std::queue<int> bfs;
        bfs.push(start);
        seen[start] = true;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            order.push_back(u);
            for (int w : h.adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    bfs.push(w);
                }
        }
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        // neighbors that appear earlier in the order, per position
        std::vector<std::vector<int>> earlier(n);
        for (auto [u, v] : h.edges) {
            int pu = pos[u], pv = pos[v];
            if (pu > pv) std::swap(pu, pv);
            earlier[pv].push_back(pu);
        }
        std::vector<int> color(n, -1);
        unsigned long long count = 0;
        auto rec = [&](auto&& self, int at) -> void {
            if (++nodes > max_states)
                throw resource_limit_error("coloring count: state limit exceeded");
            if (at == n) {
                ++count;
                return;
            }
            std::uint32_t forbidden = 0;
            for (int p : earlier[at]) forbidden |= 1u << color[p];
            for (int c = 0; c < q; ++c) {
                if ((forbidden >> c) & 1) continue;
                color[at] = c;
                self(self, at + 1);
            }
            color[at] = -1;
        };
        rec(rec, 0);
        total *= count;
        if (total == 0) return 0;
    }
    return total;
}

bool polynomial_route_feasible(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        if ((int)comp.size() <= 10) continue;
        Graph h = induced_subgraph(g, comp);
        if (is_complete_connected(h) || h.edge_count() == h.n - 1 || is_cycle_connected(h))
            continue;
        return false;
    }
    return true;
}

}  // namespace

UnivariatePolynomial chromatic_polynomial(const Graph& g, long long max_states) {
    for (const auto& comp : connected_components(g))
        if (comp.size() > 16) {
            Graph h = induced_subgraph(g, comp);
            if (!(is_complete_connected(h) || h.edge_count() == h.n - 1 || is_cycle_connected(h)))
                throw resource_limit_error(
                    "chromatic polynomial: component too large for deletion-contraction");
        }
    DcContext ctx{max_states};
    return chromatic_rec(g, ctx);
}

Int chromatic_eval(const Graph& g, const Int& q, long long max_states) {
    if (q < 0) throw std::invalid_argument("color count must be nonnegative");
    if (polynomial_route_feasible(g)) {
        try {
            return chromatic_polynomial(g, max_states).eval(q);
        } catch (const resource_limit_error&) {
            if (q > 32) throw;
        }
    }
    if (q <= 32) return count_colorings_backtracking(g, (int)q, max_states);
    throw resource_limit_error("chromatic evaluation: instance too large for exact counting");
}

Rational uniform_proper_probability(const Graph& g, const Int& q, long long max_states) {
    if (q < 1) throw std::invalid_argument("color count must be positive");
    return Rational(chromatic_eval(g, q, max_states), int_pow(q, g.n));
}

Rational mean_colors(const Graph& g, long long max_states) {
    if (g.n < 1) throw std::invalid_argument("mean colors needs at least one vertex");
    Int lo = chromatic_eval(g, g.n - 1, max_states);
    Int hi = chromatic_eval(g, g.n, max_states);
    return Rational(g.n) * (Rational(1) - Rational(lo, hi));
}

bool shameful_ratio_monotone(const Graph& g, const Int& q, long long max_states) {
    if (q < 2) throw std::invalid_argument("ratio monotonicity needs q >= 2");
    Int lo = chromatic_eval(g, q - 1, max_states);
    Int hi = chromatic_eval(g, q, max_states);
    // chi(q-1)/(q-1)^n <= chi(q)/q^n without forming the quotients
    return lo * int_pow(q, g.n) <= hi * int_pow(q - 1, g.n);
}

}  // namespace chromaprob
