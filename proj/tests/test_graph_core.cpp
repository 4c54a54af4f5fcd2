#include "cleangraph/fixtures.hpp"
#include "cleangraph/graph.hpp"

#include "naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace cleangraph;

TEST_CASE("vertex set basics") {
    VertexSet s(100);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.add(3);
    s.add(70);
    s.add(3);
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(70));
    CHECK(!s.contains(4));
    s.remove(3);
    CHECK(!s.contains(3));
    CHECK(s.count() == 1);

    CHECK(VertexSet::of(5, {0, 2, 4}).elements() == std::vector<int>{0, 2, 4});
    CHECK(VertexSet::full(5).count() == 5);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::full(64).count() == 64);
}

TEST_CASE("vertex set iteration and first/next") {
    VertexSet s = VertexSet::of(130, {0, 63, 64, 129});
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(63) == 64);
    CHECK(s.next(64) == 129);
    CHECK(s.next(129) == -1);
    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 63, 64, 129});
    CHECK(VertexSet(10).first() == -1);
}

TEST_CASE("vertex set algebra") {
    VertexSet a = VertexSet::of(10, {1, 2, 3});
    VertexSet b = VertexSet::of(10, {3, 4});
    CHECK((a | b) == VertexSet::of(10, {1, 2, 3, 4}));
    CHECK((a & b) == VertexSet::of(10, {3}));
    VertexSet c = a;
    c -= b;
    CHECK(c == VertexSet::of(10, {1, 2}));
    CHECK(a.intersects(b));
    CHECK(!c.intersects(b));
    CHECK(VertexSet::of(10, {1, 2}).is_subset_of(a));
    CHECK(!a.is_subset_of(b));
}

TEST_CASE("vertex set order is by element sequence") {
    VertexSet u0 = VertexSet::of(4, {0});
    VertexSet u01 = VertexSet::of(4, {0, 1});
    VertexSet u02 = VertexSet::of(4, {0, 2});
    VertexSet u1 = VertexSet::of(4, {1});
    CHECK(lex_less(u0, u01));
    CHECK(lex_less(u01, u02));
    CHECK(lex_less(u02, u1));
    CHECK(!lex_less(u1, u0));
    CHECK(!lex_less(u0, u0));
}

TEST_CASE("graph construction and accessors") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);  // duplicate collapsed
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(!g.is_null());
    CHECK(Graph(0).is_null());

    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(k3.complement().edge_count() == 0);
    Graph g = random_graph(9, 0.4, 5);
    Graph gcc = g.complement().complement();
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) CHECK(g.adjacent(u, v) == gcc.adjacent(u, v));
}

TEST_CASE("induced subgraph") {
    Graph c6 = cycle(6);
    std::vector<int> labels;
    Graph sub = c6.induced(VertexSet::of(6, {0, 1, 2}), &labels);
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(labels == std::vector<int>{0, 1, 2});
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.adjacent(1, 2));
    CHECK(!sub.adjacent(0, 2));

    Graph empty = c6.induced(VertexSet(6));
    CHECK(empty.is_null());
}

TEST_CASE("clique and completeness predicates") {
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}});
    CHECK(is_clique(g, VertexSet::of(5, {0, 1, 2})));
    CHECK(is_clique(g, VertexSet::of(5, {0})));
    CHECK(is_clique(g, VertexSet(5)));
    CHECK(!is_clique(g, VertexSet::of(5, {2, 3})));

    CHECK(is_complete_between(g, VertexSet::of(5, {3}), VertexSet::of(5, {0, 1})));
    CHECK(!is_complete_between(g, VertexSet::of(5, {3}), VertexSet::of(5, {0, 2})));
    CHECK(is_anticomplete_between(g, VertexSet::of(5, {4}), VertexSet::of(5, {0, 1, 2, 3})));
    CHECK(!is_anticomplete_between(g, VertexSet::of(5, {3}), VertexSet::of(5, {1})));
    CHECK_THROWS_AS(
        is_complete_between(g, VertexSet::of(5, {0, 1}), VertexSet::of(5, {1, 2})),
        std::invalid_argument);
    CHECK_THROWS_AS(
        is_anticomplete_between(g, VertexSet::of(5, {0}), VertexSet::of(5, {0})),
        std::invalid_argument);
}

TEST_CASE("induced path predicate") {
    Graph c6 = cycle(6);
    CHECK(is_induced_path(c6, {0, 1, 2, 3}));
    CHECK(is_induced_path(c6, {0}));
    CHECK(!is_induced_path(c6, {0, 1, 2, 3, 4, 5}));  // closes a cycle
    CHECK(!is_induced_path(c6, {0, 2}));              // not adjacent
    CHECK(!is_induced_path(c6, {0, 1, 0}));           // repeats
    CHECK(!is_induced_path(c6, {}));
}

TEST_CASE("induced path in a cycle") {
    Graph c6 = cycle(6);
    auto p = find_induced_path(c6, VertexSet::of(6, {0}), VertexSet::of(6, {3}),
                               VertexSet::full(6));
    REQUIRE(p.has_value());
    CHECK(p->vertices == std::vector<int>{0, 1, 2, 3});

    // with vertex 1 disallowed, the other side of the cycle is forced
    auto q = find_induced_path(c6, VertexSet::of(6, {0}), VertexSet::of(6, {3}),
                               VertexSet::of(6, {0, 2, 3, 4, 5}));
    REQUIRE(q.has_value());
    CHECK(q->vertices == std::vector<int>{0, 5, 4, 3});

    // no interior vertices available at all
    auto r = find_induced_path(c6, VertexSet::of(6, {0}), VertexSet::of(6, {3}),
                               VertexSet::of(6, {0, 3}));
    CHECK(!r.has_value());

    // overlapping endpoint sets collapse to a single vertex
    auto s = find_induced_path(c6, VertexSet::of(6, {2, 4}), VertexSet::of(6, {4, 5}),
                               VertexSet(6));
    REQUIRE(s.has_value());
    CHECK(s->vertices == std::vector<int>{4});

    CHECK_THROWS_AS(find_induced_path(c6, VertexSet(6), VertexSet::of(6, {1}), VertexSet::full(6)),
                    std::invalid_argument);
}

TEST_CASE("induced path agrees with breadth first search") {
    for (int seed = 0; seed < 200; ++seed) {
        int n = 4 + seed % 5;
        Graph g = random_graph(n, 0.35, 1000 + seed);
        std::uint64_t r1 = splitmix64(seed * 3 + 1);
        std::uint64_t r2 = splitmix64(seed * 3 + 2);
        int a = int(r1 % n), b = int(r2 % n);
        if (a == b) continue;
        VertexSet from = VertexSet::of(n, {a});
        VertexSet to = VertexSet::of(n, {b});
        VertexSet allowed(n);
        for (int v = 0; v < n; ++v)
            if (splitmix64(seed * 97 + v) % 4 != 0) allowed.add(v);

        auto path = find_induced_path(g, from, to, allowed);
        int expect = naive::shortest_path_length(g, from, to, allowed);
        if (!path.has_value()) {
            CHECK(expect == -1);
            continue;
        }
        REQUIRE(expect >= 0);
        CHECK(int(path->vertices.size()) - 1 == expect);
        CHECK(is_induced_path(g, path->vertices));
        CHECK(from.contains(path->vertices.front()));
        CHECK(to.contains(path->vertices.back()));
        for (std::size_t i = 1; i + 1 < path->vertices.size(); ++i) {
            CHECK(allowed.contains(path->vertices[i]));
            CHECK(!from.contains(path->vertices[i]));
            CHECK(!to.contains(path->vertices[i]));
        }
    }
}

TEST_CASE("formatting") {
    CHECK(format_vertex_set(VertexSet::of(5, {0, 2, 4})) == "{0,2,4}");
    CHECK(format_vertex_set(VertexSet(5)) == "{}");
    CHECK(format_vertex_list({3, 1, 2}, '-') == "3-1-2");
    CHECK(format_vertex_list({}, ',').empty());
}
