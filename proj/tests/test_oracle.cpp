#include "cleangraph/fixtures.hpp"
#include "cleangraph/oracle.hpp"

#include "enumerate.hpp"
#include "naive.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cleangraph;
using cleangraph::testing::for_each_graph;

namespace {

std::vector<std::vector<int>> as_lists(const OracleReport& report) {
    std::vector<std::vector<int>> out;
    for (const auto& k : report.cliques) out.push_back(k.elements());
    return out;
}

}  // namespace

TEST_CASE("triangle lists every clique") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    OracleReport report = enumerate_simplicial_cliques(k3);
    std::vector<std::vector<int>> expected = {{0},    {0, 1}, {0, 1, 2}, {0, 2},
                                              {1},    {1, 2}, {2}};
    CHECK(as_lists(report) == expected);
    CHECK(report.count_by_size.size() == 4);
    CHECK(report.count_by_size[1] == 3);
    CHECK(report.count_by_size[2] == 3);
    CHECK(report.count_by_size[3] == 1);
    CHECK(report.contains(VertexSet::of(3, {0, 1})));
    CHECK(!report.contains(VertexSet::of(3, {})));
}

TEST_CASE("cycles list their edges") {
    OracleReport c7 = enumerate_simplicial_cliques(cycle(7));
    CHECK(c7.cliques.size() == 7);
    for (const auto& k : c7.cliques) CHECK(k.count() == 2);

    OracleReport c6 = enumerate_simplicial_cliques(cycle(6));
    CHECK(c6.cliques.size() == 6);
}

TEST_CASE("counterexample families have empty oracle lists") {
    CHECK(enumerate_simplicial_cliques(complement_cycle(7)).cliques.empty());
    CHECK(enumerate_simplicial_cliques(complement_cycle(9)).cliques.empty());
    CHECK(enumerate_simplicial_cliques(cycle_square(9)).cliques.empty());
    CHECK(enumerate_simplicial_cliques(hat_cycle(5)).cliques.empty());
    CHECK(enumerate_simplicial_cliques(hat_cycle(7)).cliques.empty());
}

TEST_CASE("the three-hat cycle keeps its hats simplicial") {
    // each hat sees exactly the central triangle, so the hats themselves
    // are simplicial vertices
    OracleReport report = enumerate_simplicial_cliques(hat_cycle(3));
    std::vector<std::vector<int>> expected = {{1}, {3}, {5}};
    CHECK(as_lists(report) == expected);
}

TEST_CASE("both oracle paths agree") {
    for (int n = 0; n <= 4; ++n)
        for_each_graph(n, [&](const Graph& g) {
            CHECK(as_lists(enumerate_simplicial_cliques(g)) ==
                  as_lists(enumerate_simplicial_cliques_subsets(g)));
        });
    for (int seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(5 + seed % 8, 0.1 + 0.07 * (seed % 10), 500 + seed);
        CHECK(as_lists(enumerate_simplicial_cliques(g)) ==
              as_lists(enumerate_simplicial_cliques_subsets(g)));
    }
}

TEST_CASE("oracle agrees with the definition") {
    for (int n = 0; n <= 4; ++n)
        for_each_graph(n, [&](const Graph& g) {
            CHECK(as_lists(enumerate_simplicial_cliques(g)) == naive::simplicial_cliques(g));
        });
    for (int seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(7, 0.4, 800 + seed);
        CHECK(as_lists(enumerate_simplicial_cliques(g)) == naive::simplicial_cliques(g));
    }
}

TEST_CASE("oracle bounds") {
    CHECK_THROWS_AS(enumerate_simplicial_cliques(Graph(21)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_simplicial_cliques_subsets(Graph(13)), std::invalid_argument);
    CHECK(enumerate_simplicial_cliques(Graph(20)).cliques.size() == 20);
    CHECK(enumerate_simplicial_cliques_subsets(Graph(12)).cliques.size() == 12);
}

TEST_CASE("theorem verification on fixtures") {
    TheoremVerdict c6 = verify_theorem(cycle(6));
    CHECK(c6.clean);
    CHECK(!c6.chordal);
    CHECK(!c6.obstruction.has_value());
    CHECK(c6.oracle.cliques.size() == 6);
    REQUIRE(c6.algorithm.has_value());
    CHECK(c6.algorithm->describe() == "clique {0,1} via dome of edge (0,1)");
    CHECK(c6.consistent());

    TheoremVerdict antihole = verify_theorem(seven_antihole_graph());
    CHECK(!antihole.clean);
    CHECK(antihole.obstruction.has_value());
    CHECK(antihole.oracle.cliques.empty());
    CHECK(antihole.consistent());

    TheoremVerdict h5 = verify_theorem(hat_cycle(5));
    CHECK(!h5.clean);
    CHECK(h5.consistent());

    TheoremVerdict k1 = verify_theorem(Graph(1));
    CHECK(k1.clean);
    CHECK(k1.chordal);
    CHECK(k1.consistent());
}

TEST_CASE("theorem verification over all small graphs") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, [&](const Graph& g) { CHECK(verify_theorem(g).consistent()); });
    for (int seed = 0; seed < 30; ++seed)
        CHECK(verify_theorem(random_graph(8, 0.35, 1300 + seed)).consistent());
}

TEST_CASE("theorem verification preconditions") {
    CHECK_THROWS_AS(verify_theorem(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(Graph(25)), std::invalid_argument);
    VerifyOptions starved;
    starved.node_budget = 1;
    CHECK_THROWS_AS(verify_theorem(cycle(6), starved), BudgetExhaustedError);
}
