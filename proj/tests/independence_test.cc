/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/generators.hh>
#include <hamtough/invariants.hh>
#include <hamtough/structure.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace hamtough;

TEST_CASE("reference values")
{
    CHECK(independence_number(cycle_graph(5)).size == 2);
    CHECK(independence_number(complete_graph(6)).size == 1);
    CHECK(independence_number(petersen_graph()).size == 4);
    CHECK(independence_number(Graph(0)).size == 0);
    CHECK(independence_number(empty_graph(5)).witness == VertexSet::range(5));
    CHECK(independence_number(cycle_graph(5)).witness == VertexSet::of({0, 2}));
}

TEST_CASE("minimum degree")
{
    CHECK(min_degree(petersen_graph()) == 3);
    CHECK(min_degree(star_graph(4)) == 1);
    CHECK(min_degree(complete_graph(4)) == 3);
    CHECK_THROWS_AS(min_degree(Graph(0)), std::invalid_argument);
}

TEST_CASE("restricted searches")
{
    auto p = petersen_graph();
    auto within = p.vertices() - closed_neighbourhood(p, 0);
    CHECK(maximum_independent_set_within(p, within).size() == 3);
    CHECK(find_independent_set_within(p, within, 3));
    CHECK(! find_independent_set_within(p, within, 4));
    CHECK(find_independent_set_within(p, VertexSet{}, 0) == VertexSet{});
}

TEST_CASE("branch and bound agrees with brute force")
{
    for (int trial = 0; trial < 1000; ++trial) {
        int n = trial % 15;
        auto g = oracles::random_graph(n, 0.1 + 0.1 * (trial % 8), 60000 + trial);
        auto fast = independence_number(g);
        auto slow = independence_number_brute_force(g);
        REQUIRE(fast.size == oracles::independence_number(g));
        CHECK(fast.size == slow.size);
        CHECK(fast.witness == slow.witness);
        CHECK(fast.witness.size() == fast.size);
        CHECK(is_independent(g, fast.witness));
    }
    CHECK_THROWS_AS(independence_number_brute_force(cycle_graph(21)), std::invalid_argument);
}
