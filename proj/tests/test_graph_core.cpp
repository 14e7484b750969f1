#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chromaprob/enumerate.hpp"
#include "chromaprob/graph.hpp"
#include "chromaprob/poset.hpp"
#include "chromaprob/random_util.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromaprob;

TEST_CASE("edge lists are normalized at construction") {
    Graph g = build_graph(4, {{2, 0}, {0, 2}, {3, 1}, {0, 1}});
    CHECK(g.n == 4);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges[0] == std::pair<int, int>(0, 1));
    CHECK(g.edges[1] == std::pair<int, int>(0, 2));
    CHECK(g.edges[2] == std::pair<int, int>(1, 3));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.degree(0) == 2);
}

TEST_CASE("named graph shapes") {
    Graph k5 = named_graph("complete:5");
    CHECK(k5.n == 5);
    CHECK(k5.edge_count() == 10);

    Graph p4 = named_graph("path:4");
    CHECK(p4.edge_count() == 3);
    CHECK(is_tree(p4));

    Graph c6 = named_graph("cycle:6");
    CHECK(c6.edge_count() == 6);
    CHECK(max_degree(c6) == 2);
    CHECK_FALSE(is_tree(c6));

    Graph star = named_graph("star:4");
    CHECK(star.n == 5);
    CHECK(star.degree(0) == 4);
    CHECK(is_tree(star));

    Graph kb = named_graph("complete_bipartite:3:3");
    CHECK(kb.n == 6);
    CHECK(kb.edge_count() == 9);
    CHECK(is_bipartite(kb));

    Graph t1 = named_graph("ternary_tree:1");
    CHECK(t1.n == 7);
    CHECK(is_tree(t1));

    CHECK_THROWS_AS((void)named_graph("nosuchshape:3"), std::invalid_argument);
}

TEST_CASE("witness graph on 19 vertices") {
    Graph g = figure1_graph();
    CHECK(g.n == 19);
    CHECK(g.edge_count() == 78);
    CHECK(is_connected(g));
    CHECK(is_claw_free(g));
    CHECK_FALSE(is_bipartite(g));
    CHECK(triangle_count(g) == 235);
    CHECK(max_degree(g) == 12);
    for (int i = 12; i < 18; ++i) CHECK(g.degree(i) == 1);
    CHECK(g.degree(18) == 6);
}

TEST_CASE("edge list text round trip") {
    Graph g = named_graph("cycle:5");
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
    CHECK_THROWS_AS((void)parse_edge_list("3 1\n0 9"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_edge_list("not numbers"), std::invalid_argument);
}

TEST_CASE("connectivity and bipartiteness") {
    Graph two_parts = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK_FALSE(is_connected(two_parts));
    auto comps = connected_components(two_parts);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() + comps[1].size() == 5);

    CHECK(is_bipartite(named_graph("cycle:6")));
    CHECK_FALSE(is_bipartite(named_graph("cycle:5")));
    auto classes = bipartition(named_graph("path:4"));
    REQUIRE(classes.has_value());
    Graph p4 = named_graph("path:4");
    for (auto [u, v] : p4.edges) CHECK((*classes)[u] != (*classes)[v]);
    CHECK_FALSE(bipartition(named_graph("complete:3")).has_value());
}

TEST_CASE("claw detection") {
    CHECK_FALSE(is_claw_free(named_graph("star:3")));
    CHECK_FALSE(is_claw_free(named_graph("star:6")));
    CHECK(is_claw_free(named_graph("complete:6")));
    CHECK(is_claw_free(named_graph("path:7")));
    CHECK(is_claw_free(named_graph("cycle:7")));
    Graph claw_plus_edge = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(is_claw_free(claw_plus_edge));
}

TEST_CASE("spanning tree counts match subset enumeration") {
    for (int n = 1; n <= 5; ++n) {
        for_each_graph_class(n, GraphClassOptions{}, [&](const Graph& g) {
            CHECK(spanning_tree_count(g) == oracles::spanning_trees_by_subsets(g));
        });
    }
    CHECK(spanning_tree_count(named_graph("complete:6")) == 1296);
    CHECK(spanning_tree_count(named_graph("cycle:8")) == 8);
    CHECK(spanning_tree_count(named_graph("path:9")) == 1);
    CHECK(spanning_tree_count(named_graph("complete_bipartite:2:3")) == 12);
}

TEST_CASE("graph surgery") {
    Graph k3 = named_graph("complete:3");
    Graph minus = remove_edge(k3, 0, 1);
    CHECK(minus.edge_count() == 2);
    Graph merged = contract_edge(k3, 0, 1);
    CHECK(merged.n == 2);
    CHECK(merged.edge_count() == 1);

    Graph p3 = named_graph("path:3");
    Graph sub = induced_subgraph(p3, {0, 2});
    CHECK(sub.n == 2);
    CHECK(sub.edge_count() == 0);

    auto masks = adjacency_masks(named_graph("star:3"));
    CHECK(masks[0] == 0b1110u);
    CHECK(masks[1] == 0b0001u);
}

TEST_CASE("canonical key is a relabeling invariant") {
    Rng rng(7);
    for (int n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(rng, n, 0.5);
            std::vector<int> relabel(n);
            std::iota(relabel.begin(), relabel.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(relabel[i], relabel[uniform_below(rng, i + 1)]);
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : g.edges) edges.push_back({relabel[u], relabel[v]});
            CHECK(canonical_key(g) == canonical_key(build_graph(n, edges)));
        }
    }
    Graph hexagon = named_graph("cycle:6");
    Graph two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_key(hexagon) != canonical_key(two_triangles));
    Graph prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                  {0, 3}, {1, 4}, {2, 5}});
    CHECK(canonical_key(prism) != canonical_key(named_graph("complete_bipartite:3:3")));
}

TEST_CASE("isomorphism class enumeration counts") {
    auto count_classes = [](int n, GraphClassOptions opt) {
        int count = 0;
        for_each_graph_class(n, opt, [&](const Graph&) { ++count; });
        return count;
    };
    int all_expected[] = {1, 2, 4, 11, 34};
    int connected_expected[] = {1, 1, 2, 6, 21};
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_classes(n, GraphClassOptions{}) == all_expected[n - 1]);
        GraphClassOptions conn;
        conn.connected_only = true;
        CHECK(count_classes(n, conn) == connected_expected[n - 1]);
    }

    GraphClassOptions with_claw;
    with_claw.claw_free = 0;
    CHECK(count_classes(4, with_claw) == 1);

    GraphClassOptions without_claw;
    without_claw.claw_free = 1;
    CHECK(count_classes(4, without_claw) == 10);

    GraphClassOptions low_degree;
    low_degree.max_degree = 2;
    CHECK(count_classes(5, low_degree) == 11);

    GraphClassOptions conn;
    conn.connected_only = true;
    int reps = 0;
    for_each_graph_class(5, conn, [&](const Graph& g) {
        CHECK(g.n == 5);
        CHECK(is_connected(g));
        ++reps;
    });
    CHECK(reps == 21);
}

TEST_CASE("seeded random graphs are reproducible") {
    Rng a(123), b(123);
    Graph g1 = random_graph(a, 8, 0.4);
    Graph g2 = random_graph(b, 8, 0.4);
    CHECK(g1.edges == g2.edges);
    Rng c(1);
    CHECK(random_graph(c, 6, 0.0).edge_count() == 0);
    CHECK(random_graph(c, 6, 1.0).edge_count() == 15);
}

TEST_CASE("poset closure and validation") {
    Poset chain = build_poset(3, {{0, 1}, {1, 2}});
    CHECK(chain.leq[0][2]);
    CHECK(chain.leq[0][0]);
    CHECK_FALSE(chain.leq[2][0]);
    CHECK(chain.comparable(0, 2));
    CHECK_THROWS_AS((void)build_poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);

    Poset parsed = parse_poset("4 2\n0 1\n2 3\n");
    CHECK(parsed.comparable(0, 1));
    CHECK_FALSE(parsed.comparable(1, 2));
}

TEST_CASE("incomparability graphs") {
    Poset chain = build_poset(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(incomparability_graph(chain).edge_count() == 0);

    Poset antichain = build_poset(4, {});
    CHECK(incomparability_graph(antichain).edge_count() == 6);

    Poset three_plus_one = build_poset(4, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_3plus1_free(three_plus_one));
    Graph inc = incomparability_graph(three_plus_one);
    CHECK(inc.edge_count() == 3);
    CHECK(inc.degree(3) == 3);
    CHECK_FALSE(is_claw_free(inc));

    Poset two_plus_two = build_poset(4, {{0, 1}, {2, 3}});
    CHECK(is_3plus1_free(two_plus_two));
    CHECK(is_3plus1_free(chain));
}

TEST_CASE("incomparability graphs of filtered random posets have no claws") {
    Rng rng(2024);
    int free_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Poset p = random_poset(rng, 6, 8);
        if (!is_3plus1_free(p)) continue;
        ++free_seen;
        CHECK(is_claw_free(incomparability_graph(p)));
    }
    CHECK(free_seen > 0);
}
