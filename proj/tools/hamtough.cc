/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/formats.hh>
#include <hamtough/generators.hh>
#include <hamtough/harness.hh>
#include <hamtough/proof_replay.hh>
#include <hamtough/report_json.hh>
#include <hamtough/structure.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace hamtough;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    struct Options
    {
        string input = "-";
        bool edge_list = false;
        string preset;
        int k = 0;
        string format = "jsonl";
        std::uint64_t seed = 0;
        unsigned workers = 1;
        int max_n_exhaustive = 7;
        double time_limit = 0;
        bool strict = false;
        bool witnesses = false;
        bool timing = false;
        string summary_csv;

        string family;
        vector<string> params;
        int n_min = -1;
        int n_max = -1;
        string p = "1/2";
        std::uint64_t count = 1;
    };

    auto add_input(CLI::App * sub, Options & o) -> void
    {
        sub->add_option("--input,-i", o.input, "graph6 file, one graph per line, or - for standard input")->envname("HAMTOUGH_INPUT");
        sub->add_flag("--edge-list", o.edge_list, "read a single graph as \"n m\" followed by m edge lines");
    }

    auto add_k(CLI::App * sub, Options & o, const string & help = "the parameter k of P2 + kP1") -> void
    {
        sub->add_option("--k", o.k, help)->envname("HAMTOUGH_K");
    }

    auto add_search_flags(CLI::App * sub, Options & o) -> void
    {
        sub->add_option("--preset", o.preset, "hypothesis preset")->required()->envname("HAMTOUGH_PRESET");
        add_k(sub, o);
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"jsonl", "csv"}))->envname("HAMTOUGH_FORMAT");
        sub->add_option("--workers", o.workers, "worker threads, 0 for all cores")->envname("HAMTOUGH_WORKERS");
        sub->add_option("--time-limit-per-graph", o.time_limit, "seconds per graph before the verdict becomes undecided")
            ->check(CLI::NonNegativeNumber)
            ->envname("HAMTOUGH_TIME_LIMIT_PER_GRAPH");
        sub->add_flag("--witnesses", o.witnesses, "include certificates in the output")->envname("HAMTOUGH_WITNESSES");
        sub->add_flag("--timing", o.timing, "include wall-clock times (output is then not reproducible)");
        sub->add_option("--summary-csv", o.summary_csv, "also write the summary counts as CSV to this path");
    }

    /// Calls f on each graph in the input; returns false if any line failed to parse.
    template <typename F_>
    auto for_each_input_graph(const Options & o, F_ && f) -> bool
    {
        std::ifstream file;
        std::istream * in = &std::cin;
        if (o.input != "-") {
            file.open(o.input);
            if (! file)
                throw std::runtime_error("cannot open " + o.input);
            in = &file;
        }

        if (o.edge_list) {
            f(parse_edge_list(*in));
            return true;
        }

        bool ok = true;
        string line;
        std::uint64_t number = 0;
        while (std::getline(*in, line)) {
            ++number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;
            auto last = line.find_last_not_of(" \t\r");
            try {
                f(parse_graph6(line.substr(first, last - first + 1)));
            }
            catch (const ParseError & e) {
                cerr << "line " << number << ": " << e.what() << "\n";
                ok = false;
            }
        }
        return ok;
    }

    auto make_search_options(const Options & o) -> SearchOptions
    {
        SearchOptions options;
        options.preset = Preset{parse_preset_id(o.preset), o.k};
        options.preset.validate();
        options.workers = o.workers;
        if (o.time_limit > 0)
            options.evaluate.time_limit = std::chrono::duration<double>(o.time_limit);
        return options;
    }

    auto report_summary(const Options & o, const SearchSummary & summary) -> int
    {
        if (o.format == "jsonl")
            cout << summary_json(summary).dump() << "\n";
        else
            cerr << summary_csv(summary);
        if (! o.summary_csv.empty()) {
            std::ofstream out(o.summary_csv);
            if (! out)
                throw std::runtime_error("cannot write " + o.summary_csv);
            out << summary_csv(summary);
        }
        for (auto & code : summary.counterexample_graph6)
            cerr << "counterexample: " << code << "\n";
        if (summary.counterexamples > 0)
            return 2;
        if (o.strict && summary.malformed > 0)
            return 1;
        return 0;
    }

    auto emitter(const Options & o) -> VerdictSink
    {
        ReportOptions report{o.witnesses, o.timing};
        if (o.format == "csv") {
            cout << verdict_csv_header() << "\n";
            return [](const Verdict & v) { cout << verdict_csv_row(v) << "\n"; };
        }
        return [report](const Verdict & v) { cout << verdict_json(v, report).dump() << "\n"; };
    }

    auto run_analyze(const Options & o) -> int
    {
        AnalyzeOptions options;
        options.report.witnesses = o.witnesses;
        bool ok = for_each_input_graph(o, [&](const Graph & g) { cout << analyze_report(g, options).dump() << "\n"; });
        return ok ? 0 : 1;
    }

    auto run_verify(const Options & o) -> int
    {
        auto options = make_search_options(o);
        std::ifstream file;
        std::istream * in = &std::cin;
        if (o.input != "-") {
            file.open(o.input);
            if (! file)
                throw std::runtime_error("cannot open " + o.input);
            in = &file;
        }
        auto summary = search(*in, options, emitter(o),
            [](const InputError & e) { cerr << "line " << e.line << ": " << e.message << "\n"; });
        return report_summary(o, summary);
    }

    auto run_replay(const Options & o) -> int
    {
        if (o.k < 0)
            throw std::invalid_argument("replay needs --k >= 1");
        int status = 0;
        bool ok = for_each_input_graph(o, [&](const Graph & g) {
            // without --k, the least k for which g is (P2 + kP1)-free; k = n always is
            int k = o.k;
            for (int j = 1; k == 0; ++j)
                if (j >= g.order() || is_p2_kp1_free(g, j).free)
                    k = j;
            auto report = replay(g, k);
            cout << replay_json(report).dump() << "\n";
            if (report.outcome == ReplayOutcome::Acyclic || report.outcome == ReplayOutcome::Undecided) {
                cerr << report.message << "\n";
                status = 1;
            }
        });
        return ok ? status : 1;
    }

    auto parse_int(const string & text, const string & what) -> int
    {
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            if (used == text.size())
                return value;
        }
        catch (const std::exception &) {
        }
        throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
    }

    /// A stream of graphs for gen and search, one family at a time.
    auto family_stream(const Options & o, const string & family, const vector<int> & orders, const Rational & p)
        -> std::function<optional<Graph>()>
    {
        if (family == "gnp") {
            auto rng = std::make_shared<std::mt19937_64>(o.seed);
            auto produced = std::make_shared<std::uint64_t>(0);
            auto total = o.count * orders.size();
            return [=]() -> optional<Graph> {
                if (*produced >= total)
                    return std::nullopt;
                int n = orders[*produced % orders.size()];
                ++*produced;
                return random_graph(n, p, (*rng)());
            };
        }
        if (family == "all") {
            struct State
            {
                std::size_t order_index = 0;
                std::uint64_t index = 0;
            };
            vector<LabeledGraphs> all;
            for (int n : orders)
                all.emplace_back(n, o.max_n_exhaustive);
            auto state = std::make_shared<State>();
            return [all, state]() -> optional<Graph> {
                while (state->order_index < all.size()) {
                    auto & current = all[state->order_index];
                    if (state->index < current.count())
                        return current.at(state->index++);
                    ++state->order_index;
                    state->index = 0;
                }
                return std::nullopt;
            };
        }
        throw std::invalid_argument("unknown generated family '" + family + "'; expected gnp or all");
    }

    auto orders_of(const Options & o) -> vector<int>
    {
        if (o.n_min < 0 || o.n_max < o.n_min)
            throw std::invalid_argument("give --n, or --n-min and --n-max with n-min <= n-max");
        vector<int> orders;
        for (int n = o.n_min; n <= o.n_max; ++n)
            orders.push_back(n);
        return orders;
    }

    auto run_search(const Options & o) -> int
    {
        auto options = make_search_options(o);
        auto next = family_stream(o, o.family, orders_of(o), Rational::parse(o.p));
        auto summary = search_generated(next, options, emitter(o));
        return report_summary(o, summary);
    }

    auto run_gen(const Options & o) -> int
    {
        auto & a = o.params;
        auto need = [&](std::size_t count, const string & usage) {
            if (a.size() != count)
                throw std::invalid_argument("usage: gen " + o.family + " " + usage);
        };
        auto emit = [](const Graph & g) { cout << write_graph6(g) << "\n"; };

        const string & f = o.family;
        if (f == "petersen") {
            need(0, "");
            emit(petersen_graph());
        }
        else if (f == "complete" || f == "cycle" || f == "path" || f == "star" || f == "empty") {
            need(1, "N");
            int n = parse_int(a[0], "N");
            if (n < 0 || n > Graph::max_order)
                throw std::invalid_argument("N must lie in [0, " + std::to_string(Graph::max_order) + "]");
            if (f == "complete")
                emit(complete_graph(n));
            else if (f == "cycle")
                emit(cycle_graph(n));
            else if (f == "path")
                emit(path_graph(n));
            else if (f == "star")
                emit(star_graph(n));
            else
                emit(empty_graph(n));
        }
        else if (f == "multipartite") {
            if (a.empty())
                throw std::invalid_argument("usage: gen multipartite SIZE...");
            vector<int> parts;
            for (auto & s : a)
                parts.push_back(parse_int(s, "part size"));
            emit(complete_multipartite(parts));
        }
        else if (f == "gnp") {
            need(2, "N P [--seed S] [--count C]");
            int n = parse_int(a[0], "N");
            if (n < 0 || n > Graph::max_order)
                throw std::invalid_argument("N must lie in [0, " + std::to_string(Graph::max_order) + "]");
            auto next = family_stream(o, "gnp", {n}, Rational::parse(a[1]));
            while (auto g = next())
                emit(*g);
        }
        else if (f == "all") {
            need(1, "N");
            auto next = family_stream(o, "all", {parse_int(a[0], "N")}, Rational(0));
            while (auto g = next())
                emit(*g);
        }
        else
            throw std::invalid_argument("unknown family '" + f + "'; expected petersen, complete, cycle, path, star, empty, multipartite, gnp or all");
        return 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Toughness, connectivity, P2 + kP1 freeness and longest-cycle analysis for small graphs"};
    app.require_subcommand(1);
    Options o;

    auto analyze = app.add_subcommand("analyze", "report every invariant of each input graph as JSON");
    add_input(analyze, o);
    analyze->add_flag("--witnesses", o.witnesses, "include cuts, independent sets and cycles")->envname("HAMTOUGH_WITNESSES");

    auto verify = app.add_subcommand("verify", "evaluate a preset on each input graph; exit 2 if a counterexample is found");
    add_input(verify, o);
    add_search_flags(verify, o);
    verify->add_flag("--strict", o.strict, "exit 1 if any input line is malformed")->envname("HAMTOUGH_STRICT");

    auto replay_cmd = app.add_subcommand("replay", "replay the longest-cycle exchange argument on each input graph");
    add_input(replay_cmd, o);
    add_k(replay_cmd, o, "the parameter k of P2 + kP1; defaults to the least k for which the input is free");

    auto search_cmd = app.add_subcommand("search", "evaluate a preset over a generated family: gnp or all");
    search_cmd->add_option("family", o.family, "gnp or all")->required();
    add_search_flags(search_cmd, o);
    int n = -1;
    search_cmd->add_option("--n", n, "order (sets both --n-min and --n-max)");
    search_cmd->add_option("--n-min", o.n_min, "smallest order");
    search_cmd->add_option("--n-max", o.n_max, "largest order");
    search_cmd->add_option("--p", o.p, "edge probability as p/q, for gnp");
    search_cmd->add_option("--count", o.count, "graphs per order, for gnp");
    search_cmd->add_option("--seed", o.seed, "random seed")->envname("HAMTOUGH_SEED");
    search_cmd->add_option("--max-n-exhaustive", o.max_n_exhaustive, "largest order allowed for exhaustive enumeration")
        ->envname("HAMTOUGH_MAX_N_EXHAUSTIVE");

    auto gen = app.add_subcommand("gen", "write graphs as graph6, one per line");
    gen->add_option("family", o.family, "petersen, complete, cycle, path, star, empty, multipartite, gnp or all")->required();
    gen->add_option("params", o.params, "family parameters");
    gen->add_option("--seed", o.seed, "random seed")->envname("HAMTOUGH_SEED");
    gen->add_option("--count", o.count, "number of graphs, for gnp");
    gen->add_option("--max-n-exhaustive", o.max_n_exhaustive, "largest order allowed for all")->envname("HAMTOUGH_MAX_N_EXHAUSTIVE");

    CLI11_PARSE(app, argc, argv);
    if (n >= 0) {
        if (o.n_min < 0)
            o.n_min = n;
        if (o.n_max < 0)
            o.n_max = n;
    }

    try {
        if (analyze->parsed())
            return run_analyze(o);
        if (verify->parsed())
            return run_verify(o);
        if (replay_cmd->parsed())
            return run_replay(o);
        if (search_cmd->parsed())
            return run_search(o);
        if (gen->parsed())
            return run_gen(o);
    }
    catch (const std::exception & e) {
        cerr << "hamtough: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
