#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace skewq;
using testutil::g1;

TEST_CASE("classification of the worked five-vertex example", "[classify]") {
    const Classification c = classify(g1(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}}));
    CHECK(c.r == 2);
    CHECK(c.alpha == 1);
    CHECK(c.beta == 3);
    CHECK(c.indecomposables_exponent == 2);
    CHECK(c.category == "D^b(mod k^4)");
    CHECK(c.is_isolated_singularity);
    CHECK(format_trace(c.trace.steps) == "mu 1\nrmu 2 <- 1\nrmu 4 <- 1\n");
}

TEST_CASE("complete graphs alternate between r=0 and r=1", "[classify]") {
    for (int n = 1; n <= 12; ++n) {
        const Classification c = classify(testutil::complete_graph(n));
        if (n % 2 == 1) {
            CHECK(c.r == 0);
            CHECK(c.category == "D^b(mod k)");
        } else {
            CHECK(c.r == 1);
            CHECK(c.category == "D^b(mod k^2)");
        }
    }
}

TEST_CASE("empty graphs give r = n - 1", "[classify]") {
    for (int n = 1; n <= 8; ++n) {
        const Classification c = classify(Graph(n));
        CHECK(c.r == n - 1);
        CHECK(c.alpha == 0);
        CHECK(c.beta == n);
    }
}

TEST_CASE("single vertex has one module", "[classify]") {
    const Classification c = classify(Graph(1));
    CHECK(c.r == 0);
    CHECK(c.indecomposables_exponent == 0);
    CHECK(c.category == "D^b(mod k)");
    CHECK(c.trace.steps.empty());
}

TEST_CASE("indecomposable count exponent", "[classify]") {
    CHECK(indecomposable_count_exponent(g1(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}})) == 2);
    CHECK(indecomposable_count_exponent(Graph(1)) == 0);
    CHECK(indecomposable_count_exponent(canonical_disjoint(0, 4)) == 3);
}

TEST_CASE("classification needs at least one vertex", "[classify]") {
    CHECK_THROWS_AS(classify(Graph(0)), precondition_error);
}

TEST_CASE("both routes agree on every small graph", "[classify]") {
    for (int n = 1; n <= 5; ++n)
        testutil::for_each_graph(n, [](const Graph& g) { REQUIRE_NOTHROW(classify(g)); });
}

TEST_CASE("category descriptor formatting", "[classify]") {
    CHECK(category_descriptor(0) == "D^b(mod k)");
    CHECK(category_descriptor(1) == "D^b(mod k^2)");
    CHECK(category_descriptor(2) == "D^b(mod k^4)");
    CHECK(category_descriptor(10) == "D^b(mod k^1024)");
    CHECK(category_descriptor(62) == "D^b(mod k^4611686018427387904)");
    CHECK(category_descriptor(63) == "D^b(mod k^(2^63))");
}

TEST_CASE("large empty graph exercises the symbolic descriptor", "[classify]") {
    const Classification c = classify(Graph(64));
    CHECK(c.r == 63);
    CHECK(c.category == "D^b(mod k^(2^63))");
}

TEST_CASE("removing an isolated edge never changes r", "[classify]") {
    // r read off the kernel route; route agreement is checked elsewhere
    for (int n = 2; n <= 7; ++n)
        testutil::for_each_graph(n, [](const Graph& g) {
            const std::vector<std::pair<int, int>> iso_edges = isolated_edges(g);
            if (iso_edges.empty()) return;
            const int r = nullity(bordered_matrix(g));
            for (auto [v, w] : iso_edges)
                REQUIRE(nullity(bordered_matrix(knoerrer_reduce(g, v, w).graph)) == r);
        });
}

TEST_CASE("removing one of two isolated vertices drops r by exactly one", "[classify]") {
    for (int n = 2; n <= 7; ++n)
        testutil::for_each_graph(n, [](const Graph& g) {
            const std::vector<int> iso = isolated_vertices(g).to_vector();
            if (iso.size() < 2) return;
            const int r = nullity(bordered_matrix(g));
            REQUIRE(nullity(bordered_matrix(two_points_reduce(g, iso[1], iso[0]).graph)) ==
                    r - 1);
        });
}
