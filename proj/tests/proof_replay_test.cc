/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/generators.hh>
#include <hamtough/proof_replay.hh>
#include <hamtough/structure.hh>

#include "oracles.hh"
#include "replay_fixtures.hh"

#include <doctest.h>

#include <random>

using namespace hamtough;

namespace
{
    auto ring(int length, int extra, std::initializer_list<Edge> more) -> Graph
    {
        GraphBuilder b(length + extra);
        for (int i = 0; i < length; ++i)
            b.add_edge(i, (i + 1) % length);
        for (auto [u, v] : more)
            b.add_edge(u, v);
        return b.build();
    }

    auto ring_cycle(const Graph & g, int length) -> Cycle
    {
        std::vector<int> sequence;
        for (int i = 0; i < length; ++i)
            sequence.push_back(i);
        return Cycle::from_sequence(g, sequence);
    }

    auto claim(const ReplayReport & r, const std::string & id) -> const ClaimReport *
    {
        for (auto & c : r.claims)
            if (c.id == id)
                return &c;
        return nullptr;
    }

    auto require_longer(const ClaimReport & report, const ProofContext & ctx) -> void
    {
        REQUIRE(report.improvement);
        CHECK(is_cycle_of(ctx.graph, report.improvement->vertices()));
        CHECK(report.improvement->length() > ctx.cycle.length());
    }
}

TEST_CASE("context fields on a wheel missing one spoke")
{
    auto g = ring(6, 1, {{6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 3);
    CHECK(ctx.degree == 5);
    CHECK(ctx.anchors == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(ctx.successors == std::vector<int>{2, 3, 4, 5, 0});
    CHECK(ctx.gap_ends == std::vector<int>{1, 2, 3, 4, 0});
    CHECK(ctx.successor_set == VertexSet::of({0, 2, 3, 4, 5}));
    CHECK(ctx.successor_neighbourhood() == VertexSet::of({1, 6}));
    CHECK(ctx.v(6) == 1);
    CHECK(ctx.u(0) == 0);
    CHECK(ctx.forward(4, 1) == std::vector<int>{4, 5, 0, 1});
    CHECK(ctx.backward(1, 4) == std::vector<int>{1, 0, 5, 4});

    auto turned = ctx.rotated(2);
    CHECK(turned.anchors == std::vector<int>{3, 4, 5, 1, 2});
    CHECK(turned.v(1) == 3);
    CHECK(turned.u(5) == 3);
}

TEST_CASE("context preconditions")
{
    auto g = ring(6, 2, {{6, 0}, {6, 3}, {6, 7}});
    CHECK_THROWS_AS(build_context(g, ring_cycle(g, 6), 6, 2), ContextError);
    CHECK_THROWS_AS(build_context(g, ring_cycle(g, 6), 2, 2), ContextError);
    CHECK_THROWS_AS(build_context(g, ring_cycle(g, 6), 9, 2), ContextError);
    auto lonely = ring(5, 1, {});
    CHECK_THROWS_AS(build_context(lonely, ring_cycle(lonely, 5), 5, 2), ContextError);
}

TEST_CASE("choice of cycle and hub")
{
    CHECK(! choose_cycle_and_hub(complete_graph(5)));
    CHECK(! choose_cycle_and_hub(path_graph(5)));

    auto p = choose_cycle_and_hub(petersen_graph());
    REQUIRE(p);
    CHECK(p->cycle.length() == 9);
    CHECK(! p->cycle.vertex_set().contains(p->hub));

    auto g = ring(6, 1, {{6, 0}, {6, 3}});
    auto c = choose_cycle_and_hub(g);
    REQUIRE(c);
    CHECK(c->cycle.length() == oracles::circumference(g));
    CHECK(c->hub == 6);
}

TEST_CASE("the Petersen graph replays without any exchange")
{
    auto r = replay(petersen_graph(), 3);
    CHECK(r.outcome == ReplayOutcome::Replayed);
    REQUIRE(r.context);
    CHECK(r.context->degree == 3);
    CHECK(r.context->successor_set.size() == 3);
    CHECK(r.context->free_known == true);
    CHECK(r.context->one_tough_known == true);
    CHECK(! r.any_improvement());
    REQUIRE(r.pair);

    for (auto id : {"successors_independent", "non_neighbours_independent", "successor_neighbour_counts",
             "successor_degrees", "hub_degree_bound", "consecutive_pair", "consecutive_pair_structure"}) {
        auto c = claim(r, id);
        REQUIRE_MESSAGE(c, id);
        CHECK_MESSAGE(c->holds, id);
    }
    auto degrees = claim(r, "successor_degrees");
    CHECK(*degrees->find_value("e(U, N(U))") <= 9);
    CHECK(*degrees->find_value("e(U, N(U))") == successor_edge_count(*r.context));
}

TEST_CASE("vacuous and degenerate replays")
{
    auto k4 = replay(complete_graph(4), 4);
    CHECK(k4.outcome == ReplayOutcome::Hamiltonian);
    CHECK(k4.message == "hamiltonian; replay vacuous");
    auto tree = replay(star_graph(5), 4);
    CHECK(tree.outcome == ReplayOutcome::Acyclic);
    CHECK(tree.message == "acyclic; no longest cycle");

    // a pendant path leaves the longest cycle, so no edge-dominating context exists
    auto tail = ring(6, 2, {{0, 6}, {6, 7}});
    CHECK(replay(tail, 2).outcome == ReplayOutcome::NotEdgeDominating);
}

TEST_CASE("a hub adjacent to a successor yields a longer cycle")
{
    auto g = ring(6, 1, {{6, 0}, {6, 1}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_successors_independent(ctx);
    CHECK(! r.holds);
    require_longer(r, ctx);
    CHECK(r.improvement->length() == 7);
}

TEST_CASE("adjacent successors yield a longer cycle by the crossing exchange")
{
    auto g = ring(6, 1, {{6, 0}, {6, 3}, {1, 4}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_successors_independent(ctx);
    CHECK(! r.holds);
    require_longer(r, ctx);
    CHECK(r.witness == std::vector<int>{1, 4});
}

TEST_CASE("a single anchor gives independent successors unless the hub sees its successor")
{
    auto g = ring(5, 1, {{5, 0}});
    CHECK(check_successors_independent(build_context(g, ring_cycle(g, 5), 5, 2)).holds);
}

TEST_CASE("an edge avoiding N(U) is reported with its P2 + kP1")
{
    auto g = ring(6, 3, {{6, 0}, {6, 3}, {7, 8}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_non_neighbours_independent(ctx);
    CHECK(! r.holds);
    CHECK(! r.checks[0].holds);
    CHECK(r.witness == std::vector<int>{7, 8, 1, 4});
    CHECK(induces_p2_kp1(g, Edge{7, 8}, VertexSet::of({1, 4})));
    CHECK(! r.checks[1].holds);
}

TEST_CASE("a small successor neighbourhood exposes a large independent set")
{
    auto g = ring(6, 1, {{6, 0}, {6, 2}, {6, 4}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_non_neighbours_independent(ctx);
    CHECK(r.checks[0].holds);
    CHECK(! r.checks[1].holds);
    CHECK(r.checks[1].detail.find("not 1-tough") != std::string::npos);
    CHECK(r.witness == std::vector<int>{1, 3, 5, 6});
}

TEST_CASE("an off-cycle vertex seeing two successors yields a longer cycle")
{
    auto g = ring(6, 2, {{6, 0}, {6, 3}, {7, 1}, {7, 4}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_non_neighbours_independent(ctx);
    CHECK(! r.checks[2].holds);
    require_longer(r, ctx);
    CHECK(r.improvement->length() == 8);
}

TEST_CASE("successor neighbour counts")
{
    auto p = replay(petersen_graph(), 3);
    auto & ctx = *p.context;
    auto nu = ctx.successor_neighbourhood();
    long naive = 0;
    for (int u : ctx.successor_set)
        for (int y : nu)
            if (ctx.graph.adjacent(u, y))
                ++naive;
    CHECK(successor_edge_count(ctx) == naive);
    CHECK(check_successor_neighbour_counts(ctx).holds);

    // the hub sees 0 and 3, so U = {1, 4}; vertex 7 hangs off u_1 only
    auto g = ring(6, 2, {{6, 0}, {6, 3}, {7, 1}});
    auto bad = check_successor_neighbour_counts(build_context(g, ring_cycle(g, 6), 6, 1));
    CHECK(! bad.holds);
    CHECK(bad.witness.size() == 1);
}

TEST_CASE("a heavy successor yields an equally long replacement cycle")
{
    // hub 6 sees 0 and 3; u_1 = 1 also sees 5 and 7, giving it degree 4 > d = 2, and u_2 = 4 sees u_1+ = 2
    auto g = ring(6, 2, {{6, 0}, {6, 3}, {1, 7}, {1, 5}, {2, 4}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    auto r = check_successor_degrees(ctx);
    CHECK(! r.holds);
    REQUIRE(r.replacement);
    CHECK(r.replacement->length() == 6);
    CHECK(! r.replacement->vertex_set().contains(1));

    auto wheel = ring(4, 1, {{4, 0}, {4, 1}, {4, 2}, {4, 3}});
    auto boundary = check_successor_degrees(build_context(wheel.without_edge(4, 3), ring_cycle(wheel, 4), 4, 2));
    CHECK(boundary.checks[0].holds);
}

TEST_CASE("size bound function")
{
    CHECK(size_bound_function(4, 4) == Rational(20));
    CHECK(size_bound_function(5, 4) == Rational(20));
    CHECK_THROWS_AS(size_bound_function(2, 4), std::domain_error);
    for (int k = 2; k <= 50; ++k)
        CHECK(size_bound_function(k, k) == Rational(k * k + k));
    for (int k = 4; k <= 10; ++k)
        CHECK(max_size_bound(k) == Rational(k * k + k));
    CHECK(! max_size_bound(3));
}

TEST_CASE("final arithmetic")
{
    CHECK(feasible_hub_degree(3) == 3);
    CHECK(! feasible_hub_degree(4));
    CHECK(! feasible_hub_degree(10));
    CHECK(final_arithmetic(4, 6, 3, 1).holds);
    auto three = final_arithmetic(3, 3, 2, 1);
    CHECK(! three.holds);
    CHECK(three.notes.size() == 1);
}

TEST_CASE("alternating membership leaves no consecutive pair")
{
    auto g = ring(6, 1, {{6, 0}, {6, 2}, {6, 4}});
    auto ctx = build_context(g, ring_cycle(g, 6), 6, 2);
    CHECK(! find_consecutive_pair(ctx));
    auto r = check_consecutive_pair_exists(ctx);
    CHECK(! r.holds);
    CHECK(r.checks[0].detail.find("alternates") != std::string::npos);
}

TEST_CASE("consecutive pair fixtures")
{
    for (auto & fixture : replay_fixtures()) {
        CAPTURE(fixture.name);
        auto g = parse_fixture_graph(fixture);
        auto ctx = build_context(g, Cycle::from_sequence(g, fixture.cycle), fixture.hub, fixture.k);
        CHECK(oracles::circumference(g) > ctx.cycle.length());
        auto report = replay_context(ctx);
        bool fired = false;
        for (auto & c : report.claims)
            for (auto & check : c.checks)
                if (check.name == fixture.exchange) {
                    fired = true;
                    CHECK(! check.holds);
                    CHECK(check.exchange);
                    require_longer(c, c.id == "consecutive_pair_structure" ? report.pair->context : ctx);
                }
        CHECK(fired);
    }
}

TEST_CASE("improvements found on random contexts are valid longer cycles")
{
    std::mt19937_64 rng(17);
    int contexts = 0, improvements = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 6 + trial % 5;
        auto g = oracles::random_graph(n, 0.45, 300000 + trial);
        auto cycles = oracles::all_cycles(g);
        if (cycles.empty())
            continue;
        auto & seq = cycles[rng() % cycles.size()];
        auto cycle = Cycle::from_sequence(g, seq);
        for (int hub : g.vertices() - cycle.vertex_set()) {
            if (g.neighbours(hub).empty() || ! g.neighbours(hub).subset_of(cycle.vertex_set()))
                continue;
            auto ctx = build_context(g, cycle, hub, 2 + trial % 3);
            auto report = replay_context(ctx);
            ++contexts;
            for (auto & c : report.claims) {
                if (c.improvement) {
                    ++improvements;
                    CHECK(is_cycle_of(g, c.improvement->vertices()));
                    CHECK(c.improvement->length() > cycle.length());
                }
                if (c.replacement) {
                    CHECK(is_cycle_of(g, c.replacement->vertices()));
                    CHECK(c.replacement->length() == cycle.length());
                }
            }
            if (static_cast<int>(seq.size()) == oracles::circumference(g))
                CHECK(! report.any_improvement());
        }
    }
    CHECK(contexts > 100);
    CHECK(improvements > 10);
}
