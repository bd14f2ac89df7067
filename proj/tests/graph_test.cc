/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/generators.hh>
#include <hamtough/graph.hh>
#include <hamtough/structure.hh>

#include "oracles.hh"

#include <doctest.h>

#include <stdexcept>

using namespace hamtough;

TEST_CASE("adjacency is symmetric, irreflexive and confined to the vertex range")
{
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 13;
        auto g = oracles::random_graph(n, 0.4, trial);
        for (int v = 0; v < n; ++v) {
            CHECK(! g.adjacent(v, v));
            CHECK(g.neighbours(v).subset_of(g.vertices()));
            for (int w : g.neighbours(v))
                CHECK(g.adjacent(w, v));
        }
    }
}

TEST_CASE("builder rejects loops and out-of-range vertices")
{
    GraphBuilder builder(3);
    CHECK_THROWS_AS(builder.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(builder.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS(Graph(65));
}

TEST_CASE("order zero and one are ordinary graphs")
{
    Graph empty(0), single(1);
    CHECK(empty.size() == 0);
    CHECK(components(empty).empty());
    CHECK(is_connected(single));
    CHECK(components(single).size() == 1);
}

TEST_CASE("induced subgraphs")
{
    auto c5 = cycle_graph(5);
    auto path = induced_subgraph(c5, VertexSet::of({0, 1, 2}));
    CHECK(path.graph == path_graph(3));
    CHECK(path.original == std::vector<int>{0, 1, 2});

    auto k4 = complete_graph(4);
    CHECK(induced_subgraph(k4, k4.vertices()).graph == k4);

    auto p = petersen_graph();
    auto rest = p.vertices() - closed_neighbourhood(p, 0) - closed_neighbourhood(p, 1);
    auto sub = induced_subgraph(p, rest).graph;
    CHECK(sub.order() == 4);
    CHECK(sub.size() == 2);
    CHECK(min_degree_within(sub, sub.vertices()) == 1);

    CHECK(induced_subgraph(p, VertexSet{}).graph.order() == 0);
}

TEST_CASE("induced subgraphs keep exactly the edges inside the set")
{
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracles::random_graph(11, 0.5, 100 + trial);
        VertexSet s{static_cast<std::uint64_t>(trial * 2654435761u) & 0x7ff};
        int inside = 0;
        for (auto e : g.edges())
            if (s.contains(e.u) && s.contains(e.v))
                ++inside;
        CHECK(induced_subgraph(g, s).graph.size() == inside);
        CHECK(edges_within(g, s) == inside);
    }
}

TEST_CASE("components")
{
    auto two_triangles = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(components(two_triangles).size() == 2);
    CHECK(components(petersen_graph()).size() == 1);
    CHECK(components(empty_graph(5)).size() == 5);
}

TEST_CASE("components partition the vertices and agree with a naive count")
{
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracles::random_graph(12, 0.15, 7 + trial);
        VertexSet seen;
        auto parts = components(g);
        for (auto c : parts) {
            CHECK(! c.intersects(seen));
            seen |= c;
        }
        CHECK(seen == g.vertices());
        CHECK(static_cast<int>(parts.size()) == oracles::components(g, g.vertices().bits()));
        CHECK(count_components_within(g, g.vertices()) == static_cast<int>(parts.size()));
    }
}

TEST_CASE("neighbourhoods")
{
    auto c5 = cycle_graph(5);
    CHECK(neighbourhood(c5, 0) == VertexSet::of({1, 4}));
    CHECK(closed_neighbourhood(c5, 0) == VertexSet::of({0, 1, 4}));
    CHECK(set_neighbourhood(c5, VertexSet::of({0})) == VertexSet::of({1, 4}));
    CHECK(set_neighbourhood(c5, VertexSet::of({0, 1})) == VertexSet::of({2, 4}));
    CHECK_THROWS_AS(neighbourhood(c5, 5), std::out_of_range);
}

TEST_CASE("set neighbourhoods never meet the set")
{
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracles::random_graph(10, 0.5, 900 + trial);
        VertexSet s{static_cast<std::uint64_t>(trial) * 37 & 0x3ff};
        CHECK(! set_neighbourhood(g, s).intersects(s));
    }
}

TEST_CASE("edits produce new graphs")
{
    auto g = path_graph(3);
    auto h = g.with_edge(0, 2);
    CHECK(g.size() == 2);
    CHECK(h == cycle_graph(3));
    CHECK(h.without_edge(0, 2) == g);
    std::vector<int> perm{2, 0, 1};
    auto r = g.relabelled(perm);
    CHECK(r.adjacent(2, 0));
    CHECK(r.adjacent(0, 1));
    CHECK(! r.adjacent(2, 1));
}
