#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace skewq;
using testutil::edges1;
using testutil::g1;

TEST_CASE("graph_from_epsilon follows the sign dictionary", "[graph]") {
    const EpsilonMatrix plus = EpsilonMatrix::from_entries(2, {1, 1, 1, 1});
    CHECK(edges1(graph_from_epsilon(plus)) == std::vector<std::pair<int, int>>{{1, 2}});

    const EpsilonMatrix minus = EpsilonMatrix::from_entries(2, {1, -1, -1, 1});
    CHECK(edges1(graph_from_epsilon(minus)).empty());
}

TEST_CASE("the five-vertex sign matrix from the worked example", "[graph]") {
    // +1 exactly at the positions of edges {12, 23, 34, 41, 15}
    const EpsilonMatrix eps = EpsilonMatrix::from_entries(
        5, {
               1,  1,  -1, 1,  1,   //
               1,  1,  1,  -1, -1,  //
               -1, 1,  1,  1,  -1,  //
               1,  -1, 1,  1,  -1,  //
               1,  -1, -1, -1, 1,   //
           });
    const Graph g = graph_from_epsilon(eps);
    CHECK(edges1(g) == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}});
    CHECK(epsilon_from_graph(g) == eps);
}

TEST_CASE("epsilon_from_graph on trivial graphs", "[graph]") {
    const EpsilonMatrix empty3 = epsilon_from_graph(Graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(empty3.sign(i, j) == (i == j ? 1 : -1));

    const EpsilonMatrix k3 = epsilon_from_graph(testutil::complete_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.sign(i, j) == 1);
}

TEST_CASE("epsilon validation rejects malformed matrices", "[graph]") {
    CHECK_THROWS_AS(EpsilonMatrix::from_entries(2, {1, 1, -1, 1}), precondition_error);
    CHECK_THROWS_AS(EpsilonMatrix::from_entries(2, {-1, 1, 1, 1}), precondition_error);
    CHECK_THROWS_AS(EpsilonMatrix::from_entries(2, {1, 0, 0, 1}), precondition_error);
    CHECK_THROWS_AS(EpsilonMatrix::from_entries(2, {1, 1, 1}), precondition_error);
}

TEST_CASE("graph/epsilon round trip, exhaustive then randomized", "[graph]") {
    for (int n = 1; n <= 5; ++n)
        testutil::for_each_graph(n, [](const Graph& g) {
            REQUIRE(graph_from_epsilon(epsilon_from_graph(g)) == g);
        });

    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 40 + static_cast<int>(rng() % 50);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) g.add_edge(i, j);
        REQUIRE(graph_from_epsilon(epsilon_from_graph(g)) == g);
    }
}

TEST_CASE("canonical_disjoint layout", "[graph]") {
    CHECK(canonical_disjoint(0, 1) == Graph(1));
    CHECK(canonical_disjoint(1, 3) == g1(5, {{1, 2}}));
    CHECK(canonical_disjoint(2, 0) == g1(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("canonical_disjoint has a isolated edges and b isolated vertices", "[graph]") {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            const Graph g = canonical_disjoint(a, b);
            CHECK(static_cast<int>(isolated_edges(g).size()) == a);
            CHECK(isolated_vertices(g).size() == b);
        }
}

TEST_CASE("neighborhood", "[graph]") {
    CHECK(neighborhood(Graph(4), 2).empty());

    const Graph q = g1(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(neighborhood(q, 0).to_vector() == std::vector<int>{1, 3});
    CHECK(neighborhood(q, 2).to_vector() == std::vector<int>{1, 3});

    CHECK(neighborhood(testutil::complete_graph(4), 1).to_vector() == std::vector<int>{0, 2, 3});
    CHECK_THROWS_AS(neighborhood(q, 6), precondition_error);
}

TEST_CASE("isolated vertices", "[graph]") {
    const Graph q = g1(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(isolated_vertices(q).to_vector() == std::vector<int>{4, 5});
    CHECK(isolated_vertices(testutil::complete_graph(5)).empty());
    CHECK(isolated_vertices(canonical_disjoint(1, 3)).to_vector() == std::vector<int>{2, 3, 4});
}

TEST_CASE("isolated edges", "[graph]") {
    CHECK(isolated_edges(canonical_disjoint(2, 1)) ==
          std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(isolated_edges(g1(3, {{1, 2}, {2, 3}})).empty());

    // every edge of the worked example has an endpoint of degree > 1
    const Graph pent = g1(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}});
    for (auto [i, j] : edges(pent))
        CHECK((pent.degree(i) > 1 || pent.degree(j) > 1));
    CHECK(isolated_edges(pent).empty());
}

TEST_CASE("remove_vertices relabels compactly", "[graph]") {
    const Graph q = g1(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});

    const Relabeling none = remove_vertices(q, VertexSet(6));
    CHECK(none.graph == q);
    CHECK(none.old_to_new == std::vector<int>{0, 1, 2, 3, 4, 5});

    const Relabeling k3 = remove_vertices(testutil::complete_graph(4), VertexSet(4, {3}));
    CHECK(k3.graph == testutil::complete_graph(3));

    const Relabeling cycle = remove_vertices(q, VertexSet(6, {4, 5}));
    CHECK(cycle.graph == g1(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    CHECK(cycle.new_to_old == std::vector<int>{0, 1, 2, 3});
    CHECK(cycle.old_to_new == std::vector<int>{0, 1, 2, 3, -1, -1});
}

TEST_CASE("remove_vertices maps are mutually inverse", "[graph]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) g.add_edge(i, j);
        VertexSet w(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) w.insert(v);
        const Relabeling r = remove_vertices(g, w);
        CHECK(r.graph.vertex_count() == n - w.size());
        for (int v = 0; v < n; ++v) {
            if (w.contains(v))
                CHECK(r.old_to_new[v] == -1);
            else
                CHECK(r.new_to_old[r.old_to_new[v]] == v);
        }
        // induced adjacency agrees with the original
        for (int a = 0; a < r.graph.vertex_count(); ++a)
            for (int b = a + 1; b < r.graph.vertex_count(); ++b)
                CHECK(r.graph.has_edge(a, b) == g.has_edge(r.new_to_old[a], r.new_to_old[b]));
    }
}

TEST_CASE("rows stay symmetric and loop-free", "[graph]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 70);  // exercises multi-word rows
        Graph g(n);
        for (int step = 0; step < 4 * n; ++step) {
            const int i = static_cast<int>(rng() % n);
            const int j = static_cast<int>(rng() % n);
            if (i == j) continue;
            g.set_edge(i, j, rng() & 1);
        }
        for (int v = 0; v < n; ++v) {
            CHECK_FALSE(g.has_edge(v, v) == true);
            for (int w = v + 1; w < n; ++w) CHECK(g.has_edge(v, w) == g.has_edge(w, v));
        }
        CHECK_THROWS_AS(g.add_edge(0, 0), precondition_error);
    }
}

TEST_CASE("relabel rebuilds the graph under a bijection", "[graph]") {
    const Graph g = g1(4, {{1, 2}, {2, 3}});
    const Graph h = relabel(g, {3, 2, 1, 0});
    CHECK(edges1(h) == std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
    CHECK_THROWS_AS(relabel(g, {0, 0, 1, 2}), precondition_error);
    CHECK_THROWS_AS(relabel(g, {0, 1, 2}), precondition_error);
}
