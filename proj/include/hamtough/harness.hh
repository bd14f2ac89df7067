/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_HARNESS_HH
#define HAMTOUGH_GUARD_HARNESS_HH 1

#include <hamtough/cycles.hh>
#include <hamtough/graph.hh>
#include <hamtough/invariants.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hamtough
{
    /**
     * The hypothesis sets that can be tested. Every preset shares the core
     * assumptions "1-tough and (P2 + kP1)-free" except AlphaKappa.
     *
     *  LargeOrder:            (k-1)-connected, n >= k^2 + k + 1, delta >= k; conclusion hamiltonian. k >= 4.
     *  EdgeDominating:        (k-1)-connected; conclusion every longest cycle is edge dominating. k >= 4.
     *  KConnected:            k-connected; conclusion hamiltonian or Petersen.
     *  MinDegreeThreeHalves:  k-connected, 2 delta >= 3k - 3; conclusion hamiltonian or Petersen.
     *  MinDegreeSevenFifths:  k-connected, 5 delta >= 7k - 6; conclusion hamiltonian or Petersen.
     *  AlphaKappa:            1-tough, kappa >= 3, alpha <= kappa + 1; conclusion hamiltonian or Petersen. No k.
     *  KMinusOneConnected:    (k-1)-connected, no order or degree floor; conclusion hamiltonian.
     */
    enum class PresetId
    {
        LargeOrder,
        EdgeDominating,
        KConnected,
        MinDegreeThreeHalves,
        MinDegreeSevenFifths,
        AlphaKappa,
        KMinusOneConnected
    };

    /// Wire names, e.g. "LARGE_ORDER".
    auto preset_name(PresetId id) -> std::string;

    /// Inverse of preset_name; throws std::invalid_argument listing the known names.
    auto parse_preset_id(const std::string & name) -> PresetId;

    auto all_preset_ids() -> std::vector<PresetId>;

    struct Preset
    {
        PresetId id;
        int k = 0;

        /// Throws std::invalid_argument if k is out of range for the preset.
        auto validate() const -> void;
    };

    struct HypothesisResult
    {
        std::string name;

        /// nullopt when skipped because an earlier hypothesis failed.
        std::optional<bool> holds;

        std::string detail;
        std::vector<int> witness;
    };

    enum class VerdictStatus
    {
        HypothesesFailed,
        ConclusionHeld,
        Counterexample,
        Undecided
    };

    auto status_name(VerdictStatus status) -> std::string;

    struct Verdict
    {
        std::string graph6;
        Preset preset;
        std::vector<HypothesisResult> hypotheses;
        bool hypotheses_satisfied = false;

        /// Only present when every hypothesis holds and the conclusion was decided.
        std::optional<bool> conclusion_holds;

        VerdictStatus status = VerdictStatus::Undecided;
        std::optional<Cycle> hamiltonian_cycle;
        std::optional<Cycle> violating_cycle;
        std::optional<VertexSet> violating_component;
        std::optional<bool> petersen;

        /// Why the verdict is undecided.
        std::string reason;

        std::chrono::duration<double> wall_time{0};
    };

    struct EvaluateOptions
    {
        ToughnessOptions toughness;
        CycleSearchOptions cycles;

        /// Per-graph wall-clock budget for the searches that honour cancellation.
        std::optional<std::chrono::duration<double>> time_limit;
    };

    /**
     * Checks hypotheses cheapest first, stopping at the first failure, and
     * only then decides the conclusion. Resource limits make the verdict
     * undecided rather than failed.
     */
    auto evaluate(const Graph & g, const Preset & preset, const EvaluateOptions & options = {}) -> Verdict;

    struct SearchOptions
    {
        Preset preset{PresetId::KConnected, 3};
        EvaluateOptions evaluate;

        /// Worker threads; 0 means hardware concurrency.
        unsigned workers = 1;

        /// Graphs evaluated per parallel round before results are emitted in order.
        std::size_t batch = 512;
    };

    struct InputError
    {
        std::uint64_t line;
        std::string message;
    };

    struct SearchSummary
    {
        std::uint64_t graphs = 0;
        std::uint64_t hypotheses_met = 0;
        std::uint64_t conclusion_held = 0;
        std::uint64_t counterexamples = 0;
        std::uint64_t undecided = 0;
        std::uint64_t malformed = 0;
        std::vector<std::string> counterexample_graph6;
    };

    using VerdictSink = std::function<void(const Verdict &)>;
    using InputErrorSink = std::function<void(const InputError &)>;

    /**
     * One verdict per graph6 line, in input order whatever the worker count.
     * Blank lines and lines starting with '#' are skipped; malformed lines go
     * to on_error with their 1-based line number and processing continues.
     */
    auto search(std::istream & input, const SearchOptions & options, const VerdictSink & on_verdict,
        const InputErrorSink & on_error = {}) -> SearchSummary;

    /// As search, over graphs produced by next until it returns nullopt.
    auto search_generated(const std::function<std::optional<Graph>()> & next, const SearchOptions & options,
        const VerdictSink & on_verdict) -> SearchSummary;

    /// Adds one verdict to the running counts.
    auto tally(SearchSummary & summary, const Verdict & verdict) -> void;
}

#endif
