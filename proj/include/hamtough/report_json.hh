/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_REPORT_JSON_HH
#define HAMTOUGH_GUARD_REPORT_JSON_HH 1

#include <hamtough/harness.hh>
#include <hamtough/proof_replay.hh>

#include <json.hpp>

#include <string>

namespace hamtough
{
    using Json = nlohmann::ordered_json;

    struct ReportOptions
    {
        /// Include certificates (cuts, independent sets, cycles) that are not needed to read the verdict.
        bool witnesses = false;

        /// Include wall-clock times, which makes output nondeterministic.
        bool timing = false;
    };

    struct AnalyzeOptions
    {
        ToughnessOptions toughness;
        CycleSearchOptions cycles;
        ReportOptions report;
    };

    /**
     * Every invariant of one graph. Rationals are "p/q" strings and infinite
     * toughness is "inf"; an invariant whose search hit a resource limit is
     * the string "undecided".
     */
    auto analyze_report(const Graph & g, const AnalyzeOptions & options = {}) -> Json;

    auto verdict_json(const Verdict & verdict, const ReportOptions & options = {}) -> Json;
    auto summary_json(const SearchSummary & summary) -> Json;
    auto replay_json(const ReplayReport & report, const ReportOptions & options = {}) -> Json;
    auto claim_json(const ClaimReport & claim) -> Json;

    auto verdict_csv_header() -> std::string;
    auto verdict_csv_row(const Verdict & verdict) -> std::string;
    auto summary_csv(const SearchSummary & summary) -> std::string;
}

#endif
