/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_TESTS_REPLAY_FIXTURES_HH
#define HAMTOUGH_GUARD_TESTS_REPLAY_FIXTURES_HH 1

#include <hamtough/graph.hh>

#include <string>
#include <vector>

/**
 * Small graphs with a deliberately non-longest cycle and hub on which one
 * named exchange of the replay fires.
 */
struct ReplayFixture
{
    std::string name;
    std::string graph6;
    std::vector<int> cycle;
    int hub;
    int k;

    /// The check name whose failure must come with a longer cycle.
    std::string exchange;
};

auto replay_fixtures() -> const std::vector<ReplayFixture> &;

auto parse_fixture_graph(const ReplayFixture & fixture) -> hamtough::Graph;

#endif
