/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/formats.hh>
#include <hamtough/generators.hh>
#include <hamtough/harness.hh>
#include <hamtough/structure.hh>

#include <array>
#include <istream>
#include <stdexcept>
#include <utility>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace hamtough
{
    namespace
    {
        constexpr std::array preset_names{
            std::pair{PresetId::LargeOrder, "LARGE_ORDER"},
            std::pair{PresetId::EdgeDominating, "EDGE_DOMINATING"},
            std::pair{PresetId::KConnected, "K_CONNECTED"},
            std::pair{PresetId::MinDegreeThreeHalves, "MIN_DEGREE_3K_HALVES"},
            std::pair{PresetId::MinDegreeSevenFifths, "MIN_DEGREE_7K_FIFTHS"},
            std::pair{PresetId::AlphaKappa, "ALPHA_KAPPA"},
            std::pair{PresetId::KMinusOneConnected, "K_MINUS_1_CONNECTED"}};

        auto describe_set(VertexSet s) -> string
        {
            string result = "{";
            for (int v : s)
                result += (result.size() > 1 ? " " : "") + to_string(v);
            return result + "}";
        }

        auto safe_min_degree(const Graph & g) -> int
        {
            return g.order() == 0 ? 0 : min_degree(g);
        }

        /// Checks a degree floor "factor * delta >= bound".
        auto degree_hypothesis(const Graph & g, string name, int factor, long long bound) -> HypothesisResult
        {
            HypothesisResult result{std::move(name), std::nullopt, {}, {}};
            int delta = safe_min_degree(g);
            result.holds = static_cast<long long>(factor) * delta >= bound;
            result.detail = "min degree " + to_string(delta);
            if (! *result.holds)
                for (int v : g.vertices())
                    if (g.degree(v) == delta) {
                        result.witness = {v};
                        break;
                    }
            return result;
        }

        auto connectivity_hypothesis(const Graph & g, int required) -> HypothesisResult
        {
            HypothesisResult result{to_string(required) + "-connected", std::nullopt, {}, {}};
            result.holds = is_k_connected(g, required);
            if (! *result.holds) {
                int kappa = vertex_connectivity(g);
                result.detail = "connectivity " + to_string(kappa);
                if (auto cut = minimum_vertex_cut(g))
                    result.witness = cut->to_vector();
            }
            return result;
        }

        auto freeness_hypothesis(const Graph & g, int k) -> HypothesisResult
        {
            HypothesisResult result{"P2 + " + to_string(k) + "P1 free", std::nullopt, {}, {}};
            auto free = is_p2_kp1_free(g, k);
            result.holds = free.free;
            if (free.witness) {
                result.witness = {free.witness->edge.u, free.witness->edge.v};
                for (int v : free.witness->isolated)
                    result.witness.push_back(v);
                result.detail = "edge " + to_string(free.witness->edge.u) + " " + to_string(free.witness->edge.v) +
                    " with independent " + describe_set(free.witness->isolated);
            }
            return result;
        }

        auto toughness_hypothesis(const Graph & g, const ToughnessOptions & options) -> HypothesisResult
        {
            HypothesisResult result{"1-tough", std::nullopt, {}, {}};
            auto tough = is_t_tough(g, Rational(1), options);
            result.holds = tough.tough;
            if (tough.violating_cut) {
                result.witness = tough.violating_cut->to_vector();
                result.detail = "removing " + describe_set(*tough.violating_cut) + " leaves " + to_string(tough.components) + " components";
            }
            return result;
        }

        auto alpha_kappa_hypothesis(const Graph & g) -> HypothesisResult
        {
            HypothesisResult result{"alpha <= kappa + 1", std::nullopt, {}, {}};
            auto alpha = independence_number(g);
            int kappa = vertex_connectivity(g);
            result.holds = alpha.size <= kappa + 1;
            result.detail = "alpha " + to_string(alpha.size) + ", kappa " + to_string(kappa);
            if (! *result.holds)
                result.witness = alpha.witness.to_vector();
            return result;
        }

        enum class Conclusion
        {
            Hamiltonian,
            HamiltonianOrPetersen,
            LongestCyclesEdgeDominating
        };

        auto conclusion_of(PresetId id) -> Conclusion
        {
            switch (id) {
                case PresetId::LargeOrder:
                case PresetId::KMinusOneConnected: return Conclusion::Hamiltonian;
                case PresetId::EdgeDominating: return Conclusion::LongestCyclesEdgeDominating;
                case PresetId::KConnected:
                case PresetId::MinDegreeThreeHalves:
                case PresetId::MinDegreeSevenFifths:
                case PresetId::AlphaKappa: return Conclusion::HamiltonianOrPetersen;
            }
            return Conclusion::Hamiltonian;
        }

        struct HypothesisCheck
        {
            string name;
            std::function<HypothesisResult()> run;
        };

        /// Hypothesis checks for a preset, cheapest first.
        auto hypotheses_of(const Graph & g, const Preset & preset, const EvaluateOptions & options) -> vector<HypothesisCheck>
        {
            int k = preset.k;
            long long n = g.order();
            auto order_floor = HypothesisCheck{"order >= k^2 + k + 1", [n, k] {
                long long floor = 1LL * k * k + k + 1;
                return HypothesisResult{"order >= k^2 + k + 1", n >= floor, "order " + to_string(n) + ", floor " + to_string(floor), {}};
            }};
            auto degree = [&g](string name, int factor, long long bound) {
                return HypothesisCheck{name, [&g, name, factor, bound] { return degree_hypothesis(g, name, factor, bound); }};
            };
            auto connected = [&g](int r) {
                return HypothesisCheck{to_string(r) + "-connected", [&g, r] { return connectivity_hypothesis(g, r); }};
            };
            auto free = HypothesisCheck{"P2 + " + to_string(k) + "P1 free", [&g, k] { return freeness_hypothesis(g, k); }};
            auto tough = HypothesisCheck{"1-tough", [&g, &options] { return toughness_hypothesis(g, options.toughness); }};

            switch (preset.id) {
                case PresetId::LargeOrder:
                    return {order_floor, degree("min degree >= k", 1, k), connected(k - 1), free, tough};
                case PresetId::EdgeDominating:
                case PresetId::KMinusOneConnected:
                    return {connected(k - 1), free, tough};
                case PresetId::KConnected:
                    return {connected(k), free, tough};
                case PresetId::MinDegreeThreeHalves:
                    return {degree("2 min degree >= 3k - 3", 2, 3LL * k - 3), connected(k), free, tough};
                case PresetId::MinDegreeSevenFifths:
                    return {degree("5 min degree >= 7k - 6", 5, 7LL * k - 6), connected(k), free, tough};
                case PresetId::AlphaKappa:
                    return {connected(3), HypothesisCheck{"alpha <= kappa + 1", [&g] { return alpha_kappa_hypothesis(g); }}, tough};
            }
            return {};
        }
    }

    auto preset_name(PresetId id) -> string
    {
        for (auto & [p, name] : preset_names)
            if (p == id)
                return name;
        throw std::invalid_argument("unknown preset");
    }

    auto parse_preset_id(const string & name) -> PresetId
    {
        string known;
        for (auto & [p, n] : preset_names) {
            if (name == n)
                return p;
            known += (known.empty() ? "" : ", ") + string(n);
        }
        throw std::invalid_argument("unknown preset '" + name + "'; known presets: " + known);
    }

    auto all_preset_ids() -> vector<PresetId>
    {
        vector<PresetId> result;
        for (auto & [p, name] : preset_names)
            result.push_back(p);
        return result;
    }

    auto Preset::validate() const -> void
    {
        if (id == PresetId::AlphaKappa)
            return;
        int floor = (id == PresetId::LargeOrder || id == PresetId::EdgeDominating) ? 4 : 2;
        if (k < floor)
            throw std::invalid_argument(preset_name(id) + " needs k >= " + to_string(floor) + ", got " + to_string(k));
        if (k > Graph::max_order)
            throw std::invalid_argument(preset_name(id) + " needs k <= " + to_string(Graph::max_order) + ", got " + to_string(k));
    }

    auto status_name(VerdictStatus status) -> string
    {
        switch (status) {
            case VerdictStatus::HypothesesFailed: return "hypotheses_failed";
            case VerdictStatus::ConclusionHeld: return "conclusion_held";
            case VerdictStatus::Counterexample: return "counterexample";
            case VerdictStatus::Undecided: return "undecided";
        }
        return "undecided";
    }

    auto evaluate(const Graph & g, const Preset & preset, const EvaluateOptions & options) -> Verdict
    {
        preset.validate();
        auto started = std::chrono::steady_clock::now();

        optional<CancellationToken> token;
        EvaluateOptions local = options;
        if (options.time_limit) {
            token.emplace(started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.time_limit));
            local.toughness.limits.cancel = &*token;
            local.cycles.limits.cancel = &*token;
        }

        Verdict verdict;
        verdict.graph6 = write_graph6(g);
        verdict.preset = preset;

        auto checks = hypotheses_of(g, preset, local);
        try {
            bool all_hold = true;
            for (auto & check : checks) {
                if (! all_hold) {
                    verdict.hypotheses.push_back(HypothesisResult{check.name, std::nullopt, {}, {}});
                    continue;
                }
                verdict.hypotheses.push_back(check.run());
                all_hold = *verdict.hypotheses.back().holds;
            }
            verdict.hypotheses_satisfied = all_hold;

            if (! all_hold)
                verdict.status = VerdictStatus::HypothesesFailed;
            else {
                auto hamiltonian = find_hamiltonian_cycle(g, local.cycles);
                verdict.hamiltonian_cycle = hamiltonian;
                bool holds = hamiltonian.has_value();
                switch (conclusion_of(preset.id)) {
                    case Conclusion::Hamiltonian: break;
                    case Conclusion::HamiltonianOrPetersen:
                        if (! holds) {
                            verdict.petersen = is_petersen(g);
                            holds = *verdict.petersen;
                        }
                        break;
                    case Conclusion::LongestCyclesEdgeDominating:
                        if (! holds) {
                            auto bad = find_non_dominating_longest_cycle(g, local.cycles);
                            holds = ! bad;
                            if (bad) {
                                verdict.violating_cycle = bad;
                                verdict.violating_component = is_edge_dominating(g, *bad).component;
                            }
                        }
                        break;
                }
                verdict.conclusion_holds = holds;
                verdict.status = holds ? VerdictStatus::ConclusionHeld : VerdictStatus::Counterexample;
            }
        }
        catch (const ResourceLimitExceeded & e) {
            verdict.status = VerdictStatus::Undecided;
            verdict.conclusion_holds.reset();
            verdict.reason = e.what();
            // a limit hit while deciding the conclusion leaves the hypotheses verdict intact
            if (verdict.hypotheses.size() < checks.size()) {
                for (auto i = verdict.hypotheses.size(); i < checks.size(); ++i)
                    verdict.hypotheses.push_back(HypothesisResult{checks[i].name, std::nullopt, {}, {}});
                verdict.hypotheses_satisfied = false;
            }
        }

        verdict.wall_time = std::chrono::steady_clock::now() - started;
        return verdict;
    }

    auto tally(SearchSummary & summary, const Verdict & verdict) -> void
    {
        ++summary.graphs;
        if (verdict.hypotheses_satisfied)
            ++summary.hypotheses_met;
        switch (verdict.status) {
            case VerdictStatus::HypothesesFailed: break;
            case VerdictStatus::ConclusionHeld: ++summary.conclusion_held; break;
            case VerdictStatus::Counterexample:
                ++summary.counterexamples;
                summary.counterexample_graph6.push_back(verdict.graph6);
                break;
            case VerdictStatus::Undecided: ++summary.undecided; break;
        }
    }

    namespace
    {
        struct Item
        {
            std::uint64_t line = 0;
            optional<Graph> graph;
            string error;
        };

        auto evaluate_batch(const vector<Item> & items, const SearchOptions & options) -> vector<optional<Verdict>>
        {
            vector<optional<Verdict>> verdicts(items.size());
            parallel_for(items.size(), options.workers, [&](std::uint64_t i) {
                if (items[i].graph)
                    verdicts[i] = evaluate(*items[i].graph, options.preset, options.evaluate);
            });
            return verdicts;
        }

        auto trimmed(const string & line) -> string
        {
            auto first = line.find_first_not_of(" \t\r\n");
            if (first == string::npos)
                return {};
            auto last = line.find_last_not_of(" \t\r\n");
            return line.substr(first, last - first + 1);
        }
    }

    auto search(std::istream & input, const SearchOptions & options, const VerdictSink & on_verdict,
        const InputErrorSink & on_error) -> SearchSummary
    {
        options.preset.validate();
        SearchSummary summary;
        std::uint64_t line_number = 0;
        bool more = true;
        std::size_t batch = std::max<std::size_t>(1, options.batch);

        while (more) {
            vector<Item> items;
            string line;
            while (items.size() < batch) {
                if (! std::getline(input, line)) {
                    more = false;
                    break;
                }
                ++line_number;
                auto text = trimmed(line);
                if (text.empty() || text.front() == '#')
                    continue;
                Item item;
                item.line = line_number;
                try {
                    item.graph = parse_graph6(text);
                }
                catch (const ParseError & e) {
                    item.error = e.what();
                }
                items.push_back(std::move(item));
            }

            auto verdicts = evaluate_batch(items, options);
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (verdicts[i]) {
                    tally(summary, *verdicts[i]);
                    if (on_verdict)
                        on_verdict(*verdicts[i]);
                }
                else {
                    ++summary.malformed;
                    if (on_error)
                        on_error(InputError{items[i].line, items[i].error});
                }
            }
        }
        return summary;
    }

    auto search_generated(const std::function<optional<Graph>()> & next, const SearchOptions & options,
        const VerdictSink & on_verdict) -> SearchSummary
    {
        options.preset.validate();
        SearchSummary summary;
        std::size_t batch = std::max<std::size_t>(1, options.batch);
        bool more = true;
        while (more) {
            vector<Item> items;
            while (items.size() < batch) {
                auto g = next();
                if (! g) {
                    more = false;
                    break;
                }
                items.push_back(Item{0, std::move(g), {}});
            }
            for (auto & verdict : evaluate_batch(items, options)) {
                tally(summary, *verdict);
                if (on_verdict)
                    on_verdict(*verdict);
            }
        }
        return summary;
    }
}
