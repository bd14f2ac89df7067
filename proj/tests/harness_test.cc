/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/formats.hh>
#include <hamtough/generators.hh>
#include <hamtough/harness.hh>
#include <hamtough/structure.hh>

#include <doctest.h>

#include <sstream>

using namespace hamtough;

namespace
{
    auto stream_of_order(int n) -> std::string
    {
        std::string text;
        LabeledGraphs graphs(n);
        for (std::uint64_t i = 0; i < graphs.count(); ++i)
            text += write_graph6(graphs.at(i)) + "\n";
        return text;
    }
}

TEST_CASE("preset names round trip")
{
    for (auto id : all_preset_ids())
        CHECK(parse_preset_id(preset_name(id)) == id);
    CHECK(all_preset_ids().size() == 7);
    CHECK_THROWS_AS(parse_preset_id("NOPE"), std::invalid_argument);
}

TEST_CASE("preset validation")
{
    CHECK_THROWS_AS((Preset{PresetId::EdgeDominating, 3}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Preset{PresetId::EdgeDominating, 4}.validate()));
    CHECK_THROWS_AS((Preset{PresetId::KConnected, 1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Preset{PresetId::AlphaKappa, 0}.validate()));
}

TEST_CASE("Petersen is the exception allowed by the minimum degree preset")
{
    auto v = evaluate(petersen_graph(), Preset{PresetId::MinDegreeThreeHalves, 3});
    CHECK(v.hypotheses_satisfied);
    for (auto & h : v.hypotheses)
        CHECK(h.holds == true);
    CHECK(v.conclusion_holds == true);
    CHECK(v.petersen == true);
    CHECK(! v.hamiltonian_cycle);
    CHECK(v.status == VerdictStatus::ConclusionHeld);

    auto k = evaluate(petersen_graph(), Preset{PresetId::KConnected, 3});
    CHECK(k.status == VerdictStatus::ConclusionHeld);
    CHECK(k.petersen == true);

    // alpha = 4 = kappa + 1, so the independence preset admits it too
    auto ak = evaluate(petersen_graph(), Preset{PresetId::AlphaKappa, 0});
    CHECK(ak.hypotheses_satisfied);
    CHECK(ak.petersen == true);
    CHECK(ak.status == VerdictStatus::ConclusionHeld);
}

TEST_CASE("Petersen is a genuine counterexample once connectivity drops to k - 1")
{
    // 2-connected, (P2 + 3P1)-free and 1-tough, yet not hamiltonian
    auto v = evaluate(petersen_graph(), Preset{PresetId::KMinusOneConnected, 3});
    CHECK(v.hypotheses_satisfied);
    CHECK(v.conclusion_holds == false);
    CHECK(v.status == VerdictStatus::Counterexample);
    CHECK(! v.petersen);

    SearchSummary summary;
    tally(summary, v);
    CHECK(summary.counterexamples == 1);
    CHECK(summary.counterexample_graph6 == std::vector<std::string>{v.graph6});
}

TEST_CASE("failing hypotheses stop the evaluation")
{
    auto small = evaluate(complete_graph(5), Preset{PresetId::LargeOrder, 4});
    CHECK(small.status == VerdictStatus::HypothesesFailed);
    CHECK(small.hypotheses[0].holds == false);
    for (std::size_t i = 1; i < small.hypotheses.size(); ++i)
        CHECK(! small.hypotheses[i].holds);
    CHECK(! small.conclusion_holds);

    auto c5 = evaluate(cycle_graph(5), Preset{PresetId::EdgeDominating, 4});
    CHECK(c5.status == VerdictStatus::HypothesesFailed);
    CHECK(c5.hypotheses[0].name == "3-connected");
    CHECK(c5.hypotheses[0].holds == false);
}

TEST_CASE("time limits produce undecided verdicts")
{
    EvaluateOptions options;
    options.cycles.limits.node_limit = 1;
    options.cycles.max_order_hamiltonian_dp = 0;
    auto v = evaluate(petersen_graph(), Preset{PresetId::KConnected, 3}, options);
    CHECK(v.status == VerdictStatus::Undecided);
    CHECK(v.hypotheses_satisfied);
    CHECK(! v.conclusion_holds);
    CHECK(! v.reason.empty());

    EvaluateOptions tough;
    tough.toughness.limits.node_limit = 1;
    auto w = evaluate(petersen_graph(), Preset{PresetId::KConnected, 3}, tough);
    CHECK(w.status == VerdictStatus::Undecided);
    CHECK(! w.hypotheses_satisfied);
    CHECK(w.hypotheses.size() == 3);
    CHECK(! w.hypotheses[2].holds);
}

TEST_CASE("search over a stream")
{
    std::istringstream one(write_graph6(petersen_graph()) + "\n");
    auto s = search(one, SearchOptions{Preset{PresetId::KConnected, 3}}, {});
    CHECK(s.graphs == 1);
    CHECK(s.hypotheses_met == 1);
    CHECK(s.conclusion_held == 1);
    CHECK(s.counterexamples == 0);

    std::istringstream empty("");
    auto e = search(empty, SearchOptions{}, {});
    CHECK(e.graphs == 0);
    CHECK(e.malformed == 0);

    std::istringstream mixed("# comment\n\nBw\nnot graph6\n  Bg  \n");
    std::vector<InputError> errors;
    std::vector<std::string> seen;
    auto m = search(mixed, SearchOptions{}, [&](const Verdict & v) { seen.push_back(v.graph6); },
        [&](const InputError & error) { errors.push_back(error); });
    CHECK(m.graphs == 2);
    CHECK(m.malformed == 1);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].line == 4);
    CHECK(seen == std::vector<std::string>{"Bw", "Bg"});
}

TEST_CASE("exhaustive order five has no counterexample to the edge-dominating conclusion")
{
    std::istringstream in(stream_of_order(5));
    auto s = search(in, SearchOptions{Preset{PresetId::EdgeDominating, 4}}, {});
    CHECK(s.graphs == 1024);
    CHECK(s.counterexamples == 0);
    CHECK(s.hypotheses_met > 0);
}

TEST_CASE("parallel search emits the same verdicts in the same order")
{
    auto text = stream_of_order(5);
    auto run = [&](unsigned workers, std::size_t batch) {
        std::istringstream in(text);
        SearchOptions options{Preset{PresetId::KConnected, 2}};
        options.workers = workers;
        options.batch = batch;
        std::vector<std::string> out;
        search(in, options, [&](const Verdict & v) { out.push_back(v.graph6 + status_name(v.status)); });
        return out;
    };
    auto serial = run(1, 512);
    CHECK(serial.size() == 1024);
    CHECK(run(3, 100) == serial);
    CHECK(run(2, 1) == serial);
}

TEST_CASE("generated search")
{
    int left = 20;
    std::uint64_t seed = 0;
    auto s = search_generated([&]() -> std::optional<Graph> {
        if (left-- == 0)
            return std::nullopt;
        return random_graph(8, Rational(7, 10), seed++);
    }, SearchOptions{Preset{PresetId::EdgeDominating, 4}}, {});
    CHECK(s.graphs == 20);
    CHECK(s.counterexamples == 0);
}
