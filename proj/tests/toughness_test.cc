/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/generators.hh>
#include <hamtough/invariants.hh>
#include <hamtough/structure.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace hamtough;

namespace
{
    auto check_witness(const Graph & g, const ToughnessResult & r) -> void
    {
        REQUIRE(r.witness);
        int omega = oracles::components(g, (g.vertices() - *r.witness).bits());
        CHECK(omega >= 2);
        CHECK(omega == r.witness_components);
        CHECK(Rational(r.witness->size(), omega) == r.value);
    }
}

TEST_CASE("complete graphs are infinitely tough")
{
    for (int n = 0; n <= 6; ++n)
        CHECK(toughness(complete_graph(n)).infinite);
    CHECK(is_t_tough(complete_graph(4), Rational(1000)).tough);
}

TEST_CASE("small reference values")
{
    auto c5 = toughness(cycle_graph(5));
    CHECK(! c5.infinite);
    CHECK(c5.value == Rational(1));
    check_witness(cycle_graph(5), c5);
    CHECK(c5.witness->size() == 2);
    CHECK(is_independent(cycle_graph(5), *c5.witness));

    auto p = toughness(petersen_graph());
    CHECK(p.value == Rational(4, 3));
    check_witness(petersen_graph(), p);

    auto star = toughness(star_graph(4));
    CHECK(star.value == Rational(1, 3));
    CHECK(*star.witness == VertexSet::of({0}));

    auto two_k2 = toughness(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(two_k2.value == Rational(0));
    CHECK(two_k2.witness->empty());
}

TEST_CASE("threshold decisions")
{
    CHECK(is_t_tough(cycle_graph(5), Rational(1)).tough);
    CHECK(! is_t_tough(cycle_graph(5), Rational(11, 10)).tough);

    auto p = is_t_tough(petersen_graph(), Rational(3, 2));
    CHECK(! p.tough);
    REQUIRE(p.violating_cut);
    CHECK(p.violating_cut->size() == 4);
    CHECK(p.components == 3);
    CHECK(oracles::components(petersen_graph(), (petersen_graph().vertices() - *p.violating_cut).bits()) == 3);
    CHECK(is_t_tough(petersen_graph(), Rational(4, 3)).tough);

    CHECK_THROWS_AS(is_t_tough(cycle_graph(5), Rational(-1)), std::invalid_argument);
}

TEST_CASE("order guard")
{
    auto big = cycle_graph(26);
    CHECK_THROWS_AS(toughness(big), ResourceLimitExceeded);
    ToughnessOptions options;
    options.allow_bounded_search = true;
    CHECK(toughness(big, options).value == Rational(1));
}

TEST_CASE("node limits abort the search")
{
    ToughnessOptions options;
    options.limits.node_limit = 5;
    CHECK_THROWS_AS(toughness(petersen_graph(), options), ResourceLimitExceeded);
}

TEST_CASE("toughness agrees with full subset enumeration")
{
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 10;
        auto g = oracles::random_graph(n, 0.3 + 0.1 * (trial % 6), 20000 + trial);
        auto expected = oracles::toughness(g);
        auto got = toughness(g);
        REQUIRE(got.infinite == ! expected.has_value());
        if (expected) {
            CHECK(got.value == *expected);
            check_witness(g, got);
            CHECK(is_t_tough(g, *expected).tough);
            CHECK(! is_t_tough(g, *expected + Rational(1, 100)).tough);
        }
    }
}
