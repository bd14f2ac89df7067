/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/generators.hh>
#include <hamtough/invariants.hh>
#include <hamtough/structure.hh>

#include <doctest.h>

#include <atomic>
#include <mutex>
#include <set>

using namespace hamtough;

TEST_CASE("families")
{
    CHECK(complete_graph(4).size() == 6);
    CHECK(empty_graph(4).size() == 0);
    CHECK(cycle_graph(5).size() == 5);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(path_graph(5).size() == 4);
    CHECK(star_graph(5).degree(0) == 4);
    auto k33 = complete_multipartite({3, 3});
    CHECK(k33.size() == 9);
    CHECK(independence_number(k33).size == 3);
    CHECK(complete_multipartite({1, 1, 1, 1}) == complete_graph(4));

    auto p = petersen_graph();
    CHECK(p.size() == 15);
    CHECK(min_degree(p) == 3);
    CHECK(girth(p) == 5);
}

TEST_CASE("random graphs are deterministic and honour the extremes")
{
    CHECK(random_graph(10, Rational(1), 5) == complete_graph(10));
    CHECK(random_graph(10, Rational(0), 5) == empty_graph(10));
    CHECK(random_graph(12, Rational(1, 2), 42) == random_graph(12, Rational(1, 2), 42));
    CHECK(random_graph(12, Rational(1, 2), 42) != random_graph(12, Rational(1, 2), 43));
    CHECK_THROWS_AS(random_graph(5, Rational(3, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, Rational(-1, 2), 1), std::invalid_argument);
}

TEST_CASE("random graph edge density is close to p")
{
    long edges = 0, pairs = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = random_graph(14, Rational(7, 10), seed);
        edges += g.size();
        pairs += 14 * 13 / 2;
    }
    double density = double(edges) / pairs;
    CHECK(density > 0.68);
    CHECK(density < 0.72);
}

TEST_CASE("labeled graph counts")
{
    CHECK(LabeledGraphs(3).count() == 8);
    CHECK(LabeledGraphs(4).count() == 64);
    CHECK(LabeledGraphs(7).count() == 2097152);
    CHECK_THROWS(LabeledGraphs(8));
    CHECK_THROWS(LabeledGraphs(12, 12));

    std::set<std::string> seen;
    LabeledGraphs four(4);
    for (std::uint64_t i = 0; i < four.count(); ++i) {
        auto g = four.at(i);
        CHECK(g.order() == 4);
        std::string key;
        for (auto e : g.edges())
            key += std::to_string(e.u) + std::to_string(e.v) + ",";
        seen.insert(key);
    }
    CHECK(seen.size() == 64);
}

TEST_CASE("filtered iteration")
{
    int connected = 0;
    LabeledGraphs(4).for_each({0, true}, [&](const Graph & g) {
        CHECK(is_connected(g));
        ++connected;
        return true;
    });
    CHECK(connected == 38);

    int at_least_two = 0;
    LabeledGraphs(4).for_each({2, false}, [&](const Graph & g) {
        CHECK(min_degree(g) >= 2);
        ++at_least_two;
        return true;
    });
    CHECK(at_least_two == 10);

    int stopped = 0;
    LabeledGraphs(4).for_each({}, [&](const Graph &) { return ++stopped < 5; });
    CHECK(stopped == 5);
}

TEST_CASE("parallel iteration visits each index once")
{
    std::mutex lock;
    std::multiset<std::uint64_t> indices;
    LabeledGraphs(5).parallel_for_each({}, 3, [&](const Graph &, std::uint64_t index) {
        std::lock_guard guard(lock);
        indices.insert(index);
    });
    CHECK(indices.size() == 1024);
    CHECK(std::set<std::uint64_t>(indices.begin(), indices.end()).size() == 1024);

    std::atomic<std::uint64_t> total{0};
    parallel_for(1000, 4, [&](std::uint64_t i) { total += i; });
    CHECK(total == 499500);
    CHECK_THROWS_AS(parallel_for(10, 2, [](std::uint64_t i) {
        if (i == 7)
            throw std::runtime_error("boom");
    }), std::runtime_error);
}
