#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "chromaprob/cluster.hpp"
#include "chromaprob/enumerate.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromaprob;

namespace {

Distribution dist(std::vector<Rational> entries) { return make_distribution(std::move(entries)); }

// signed count of connected spanning edge subsets, recomputed directly
long long signed_connected_subsets(const Graph& g) {
    int m = g.edge_count();
    long long total = 0;
    for (unsigned subset = 0; subset < (1u << m); ++subset) {
        std::vector<std::vector<int>> adj(g.n);
        for (int e = 0; e < m; ++e) {
            if (!((subset >> e) & 1)) continue;
            adj[g.edges[e].first].push_back(g.edges[e].second);
            adj[g.edges[e].second].push_back(g.edges[e].first);
        }
        std::vector<bool> seen(g.n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != g.n) continue;
        total += (__builtin_popcount(subset) % 2 == 0) ? 1 : -1;
    }
    return total;
}

}  // namespace

TEST_CASE("factorial tree bound") {
    for (int delta = 2; delta <= 6; ++delta) CHECK(t_n_delta(1, delta) == Rational(delta));
    CHECK(t_n_delta(3, 2) == Rational(4));
    for (int n = 1; n <= 8; ++n) CHECK(t_n_delta(n + 1, 3) > t_n_delta(n, 3));
    CHECK_THROWS_AS((void)t_n_delta(3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)t_n_delta(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)t_n_delta(300000, 3), resource_limit_error);
}

TEST_CASE("signed subset sweep against direct recount") {
    PenroseReport triangle = penrose_check(named_graph("complete:3"));
    CHECK(triangle.signed_sum == 2);
    CHECK(triangle.trees == 3);
    CHECK(triangle.holds);

    PenroseReport path = penrose_check(named_graph("path:3"));
    CHECK(path.signed_sum == 1);
    CHECK(path.trees == 1);

    GraphClassOptions conn;
    conn.connected_only = true;
    for (int n = 1; n <= 5; ++n) {
        for_each_graph_class(n, conn, [&](const Graph& g) {
            PenroseReport report = penrose_check(g);
            CHECK(report.signed_sum == signed_connected_subsets(g));
            CHECK(report.trees == spanning_tree_count(g));
            CHECK(report.holds);
        });
    }

    CHECK_THROWS_AS((void)penrose_check(build_graph(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)penrose_check(named_graph("complete:8")), resource_limit_error);
}

TEST_CASE("log expansion coefficients of small shapes") {
    PowerSumPolynomial k3 = mayer_log_expansion(named_graph("complete:3"), 4);
    CHECK(k3.terms.at({2}) == -3);
    CHECK(k3.terms.at({3}) == 2);
    CHECK(k3.terms.at({2, 2}) == Rational(-9, 2));

    PowerSumPolynomial p3 = mayer_log_expansion(named_graph("path:3"), 4);
    CHECK(p3.terms.at({2}) == -2);
    CHECK(p3.terms.at({3}) == 1);
    CHECK(p3.terms.at({2, 2}) == -2);
}

TEST_CASE("low order log coefficients follow counting identities") {
    for (int n = 2; n <= 5; ++n) {
        for_each_graph_class(n, GraphClassOptions{}, [&](const Graph& g) {
            if (g.edge_count() == 0) return;
            PowerSumPolynomial log = mayer_log_expansion(g, 4);
            Rational m(g.edge_count());
            Rational wedges(0);
            for (int v = 0; v < g.n; ++v) wedges += Rational(binomial(g.degree(v), 2));

            CHECK(log.terms.at({2}) == -m);

            Rational c3 = log.terms.count({3}) ? log.terms.at({3}) : Rational(0);
            CHECK(c3 == wedges - Rational(triangle_count(g)));

            Rational c22 = log.terms.count({2, 2}) ? log.terms.at({2, 2}) : Rational(0);
            CHECK(c22 == -wedges - m / 2);
        });
    }
}

TEST_CASE("exponentiating the log expansion recovers the subset expansion") {
    for (int n = 2; n <= 5; ++n) {
        for_each_graph_class(n, GraphClassOptions{}, [&](const Graph& g) {
            if (g.edge_count() > 6) return;
            const int weight = 8;
            PowerSumPolynomial log = mayer_log_expansion(g, weight);
            PowerSumPolynomial series = ps_constant(Rational(1));
            PowerSumPolynomial power = ps_constant(Rational(1));
            Rational inv_factorial(1);
            for (int j = 1; j <= weight / 2; ++j) {
                power = ps_mul(power, log, weight);
                inv_factorial /= j;
                series = ps_add(series, ps_scale(power, inv_factorial));
            }
            CHECK(series == ps_truncate(power_sum_form(g), weight));
        });
    }
}

TEST_CASE("coefficient magnitudes sit inside the stated envelope") {
    Graph k3 = named_graph("complete:3");
    CoefficientBoundReport report = coefficient_bound_report(k3, 6);
    CHECK(report.in_stated_regime);
    REQUIRE_FALSE(report.rows.empty());
    for (const auto& row : report.rows) {
        CHECK(row.within);
        int weight = partition_weight(row.alpha);
        int parts = (int)row.alpha.size();
        Rational expected = Rational(4 * k3.edge_count(), 5) *
                            rat_pow(Rational(7963907, 1000000) * 2, weight - parts);
        CHECK(row.bound == expected);
    }

    CHECK_FALSE(coefficient_bound_report(named_graph("path:2"), 4).in_stated_regime);

    GraphClassOptions conn;
    conn.connected_only = true;
    for (int n = 3; n <= 5; ++n) {
        for_each_graph_class(n, conn, [&](const Graph& g) {
            if (max_degree(g) < 2 || g.edge_count() > 6) return;
            CoefficientBoundReport r = coefficient_bound_report(g, 6);
            CHECK(r.in_stated_regime);
            for (const auto& row : r.rows) CHECK(row.within);
        });
    }
}

TEST_CASE("palette thresholds") {
    CHECK(threshold_q_main(2) == 10080001);
    CHECK(threshold_q_shameful(2) == 1132);
    CHECK(threshold_q_nonvanishing(2) == 2030);
    CHECK(threshold_q_main(1) == 630001);
    CHECK(threshold_q_shameful(1) == 401);

    Rational k(7963907, 1000000);
    for (int delta = 1; delta <= 5; ++delta) {
        CHECK(threshold_q_main(delta) ==
              least_integer_above(Rational(630000) * int_pow(Int(delta), 4)));
        CHECK(threshold_q_nonvanishing(delta) ==
              least_integer_above(Rational(4) * k * k * int_pow(Int(delta), 3)));
    }
    for (int delta = 2; delta <= 5; ++delta)
        CHECK(threshold_q_shameful(delta) > threshold_q_shameful(delta - 1));
}

TEST_CASE("polymer systems reproduce the proper coloring probability") {
    Graph k3 = named_graph("complete:3");
    PolymerSystem system = graph_polymer_system(k3, uniform_distribution(3));
    REQUIRE(system.polymers.size() == 4);
    for (std::size_t i = 0; i < system.polymers.size(); ++i)
        for (std::size_t j = 0; j < system.polymers.size(); ++j)
            CHECK(system.conflict[i][j]);
    CHECK(polymer_partition_function(system) == Rational(2, 9));

    Distribution skew = dist({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    for (int n = 2; n <= 5; ++n) {
        for_each_graph_class(n, GraphClassOptions{}, [&](const Graph& g) {
            PolymerSystem s = graph_polymer_system(g, skew);
            CHECK(polymer_partition_function(s) == proper_probability(g, skew));
        });
    }
}

TEST_CASE("independent subset sums over handcrafted conflicts") {
    PolymerSystem free_pair;
    free_pair.polymers = {{"a", Rational(1, 2)}, {"b", Rational(1, 3)}};
    free_pair.conflict = {{true, false}, {false, true}};
    CHECK(polymer_partition_function(free_pair) == Rational(2));

    PolymerSystem clash;
    clash.polymers = {{"a", Rational(1, 2)}, {"b", Rational(1, 3)}};
    clash.conflict = {{true, true}, {true, true}};
    CHECK(polymer_partition_function(clash) == Rational(11, 6));
}

TEST_CASE("convergence certificate reacts to the weight scale") {
    PolymerSystem system;
    system.polymers = {{"a", Rational(1, 1000000)}, {"b", Rational(1, 1000000)}};
    system.conflict = {{true, true}, {true, true}};
    CHECK(kotecky_preiss_holds(system, {0.5, 0.5}));

    PolymerSystem heavy;
    heavy.polymers = {{"a", Rational(10)}, {"b", Rational(10)}};
    heavy.conflict = {{true, true}, {true, true}};
    CHECK_FALSE(kotecky_preiss_holds(heavy, {0.5, 0.5}));
}
