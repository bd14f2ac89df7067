/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/formats.hh>
#include <hamtough/invariants.hh>
#include <hamtough/report_json.hh>
#include <hamtough/structure.hh>

#include <functional>

using std::string;
using std::to_string;

namespace hamtough
{
    namespace
    {
        auto set_json(VertexSet s) -> Json
        {
            return Json(s.to_vector());
        }

        /// Runs f, mapping a tripped resource limit to "undecided".
        auto guarded(const std::function<Json()> & f) -> Json
        {
            try {
                return f();
            }
            catch (const ResourceLimitExceeded &) {
                return "undecided";
            }
        }

        auto context_json(const ProofContext & ctx) -> Json
        {
            Json j;
            j["cycle"] = ctx.cycle.vertices();
            j["cycle_length"] = ctx.cycle.length();
            j["hub"] = ctx.hub;
            j["d"] = ctx.degree;
            j["k"] = ctx.k;
            j["anchors"] = ctx.anchors;
            j["successors"] = ctx.successors;
            j["gap_ends"] = ctx.gap_ends;
            auto nu = ctx.successor_neighbourhood();
            j["successor_neighbourhood"] = set_json(nu);
            j["successor_edge_count"] = successor_edge_count(ctx);
            j["index_base"] = 1;
            return j;
        }
    }

    auto analyze_report(const Graph & g, const AnalyzeOptions & options) -> Json
    {
        bool witnesses = options.report.witnesses;
        Json j;
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        j["m"] = g.size();

        Json cut = nullptr;
        j["toughness"] = guarded([&]() -> Json {
            auto t = toughness(g, options.toughness);
            if (t.witness)
                cut = set_json(*t.witness);
            return t.infinite ? string("inf") : t.value.to_string();
        });
        if (witnesses)
            j["toughness_cut"] = cut;

        j["connectivity"] = vertex_connectivity(g);
        if (witnesses) {
            auto cut = minimum_vertex_cut(g);
            j["connectivity_cut"] = cut ? set_json(*cut) : Json(nullptr);
        }

        auto alpha = independence_number(g);
        j["independence_number"] = alpha.size;
        if (witnesses)
            j["independent_set"] = set_json(alpha.witness);

        j["min_degree"] = g.order() == 0 ? 0 : min_degree(g);

        j["hamiltonian"] = guarded([&]() -> Json { return find_hamiltonian_cycle(g, options.cycles).has_value(); });
        j["circumference"] = guarded([&]() -> Json { return circumference(g, options.cycles); });
        if (witnesses) {
            j["hamiltonian_cycle"] = guarded([&]() -> Json {
                auto c = find_hamiltonian_cycle(g, options.cycles);
                return c ? Json(c->vertices()) : Json(nullptr);
            });
            j["longest_cycle"] = guarded([&]() -> Json {
                auto c = find_longest_cycle(g, options.cycles);
                return c ? Json(c->vertices()) : Json(nullptr);
            });
        }

        // free for every k >= alpha, so listing k up to alpha covers all cases
        Json freeness = Json::object();
        Json freeness_witnesses = Json::object();
        int least_free = -1;
        for (int k = 1; k <= std::max(1, alpha.size); ++k) {
            auto result = is_p2_kp1_free(g, k);
            freeness[to_string(k)] = result.free;
            if (result.free && least_free == -1)
                least_free = k;
            if (result.witness)
                freeness_witnesses[to_string(k)] = Json{{"edge", {result.witness->edge.u, result.witness->edge.v}},
                    {"isolated", set_json(result.witness->isolated)}};
        }
        j["p2_kp1_free"] = freeness;
        j["least_free_k"] = least_free;
        if (witnesses)
            j["p2_kp1_witnesses"] = freeness_witnesses;

        j["petersen"] = is_petersen(g);
        return j;
    }

    auto verdict_json(const Verdict & verdict, const ReportOptions & options) -> Json
    {
        Json j;
        j["type"] = "verdict";
        j["graph6"] = verdict.graph6;
        j["preset"] = preset_name(verdict.preset.id);
        if (verdict.preset.id != PresetId::AlphaKappa)
            j["k"] = verdict.preset.k;

        Json hypotheses = Json::array();
        for (auto & h : verdict.hypotheses) {
            Json item;
            item["name"] = h.name;
            item["holds"] = h.holds ? Json(*h.holds) : Json(nullptr);
            if (! h.detail.empty())
                item["detail"] = h.detail;
            if (options.witnesses && ! h.witness.empty())
                item["witness"] = h.witness;
            hypotheses.push_back(item);
        }
        j["hypotheses"] = hypotheses;
        j["hypotheses_satisfied"] = verdict.hypotheses_satisfied;
        if (verdict.conclusion_holds)
            j["conclusion_holds"] = *verdict.conclusion_holds;
        j["status"] = status_name(verdict.status);
        if (verdict.petersen)
            j["petersen"] = *verdict.petersen;
        if (verdict.violating_cycle)
            j["violating_cycle"] = verdict.violating_cycle->vertices();
        if (verdict.violating_component)
            j["violating_component"] = set_json(*verdict.violating_component);
        if (options.witnesses && verdict.hamiltonian_cycle)
            j["hamiltonian_cycle"] = verdict.hamiltonian_cycle->vertices();
        if (! verdict.reason.empty())
            j["reason"] = verdict.reason;
        if (options.timing)
            j["wall_time_seconds"] = verdict.wall_time.count();
        return j;
    }

    auto summary_json(const SearchSummary & summary) -> Json
    {
        Json j;
        j["type"] = "summary";
        j["graphs"] = summary.graphs;
        j["hypotheses_met"] = summary.hypotheses_met;
        j["conclusion_held"] = summary.conclusion_held;
        j["counterexamples"] = summary.counterexamples;
        j["undecided"] = summary.undecided;
        j["malformed"] = summary.malformed;
        j["counterexample_graph6"] = summary.counterexample_graph6;
        return j;
    }

    auto claim_json(const ClaimReport & claim) -> Json
    {
        Json j;
        j["id"] = claim.id;
        j["holds"] = claim.holds;
        Json checks = Json::array();
        for (auto & c : claim.checks) {
            Json item{{"name", c.name}, {"holds", c.holds}};
            if (! c.detail.empty())
                item["detail"] = c.detail;
            if (c.exchange)
                item["exchange"] = true;
            checks.push_back(item);
        }
        j["checks"] = checks;
        Json values = Json::object();
        for (auto & [name, value] : claim.values)
            values[name] = value;
        j["values"] = values;
        if (! claim.witness.empty())
            j["witness"] = claim.witness;
        if (claim.improvement)
            j["improvement"] = claim.improvement->vertices();
        if (claim.replacement)
            j["replacement"] = claim.replacement->vertices();
        if (! claim.notes.empty())
            j["notes"] = claim.notes;
        return j;
    }

    auto replay_json(const ReplayReport & report, const ReportOptions &) -> Json
    {
        Json j;
        j["type"] = "replay";
        j["outcome"] = outcome_name(report.outcome);
        if (! report.message.empty())
            j["message"] = report.message;
        if (report.context) {
            j["graph6"] = write_graph6(report.context->graph);
            j["context"] = context_json(*report.context);
        }
        if (report.pair) {
            j["consecutive_pair"] = Json{{"x", report.pair->x}, {"x_plus", report.pair->context.succ(report.pair->x)},
                {"l", report.pair->left_index + 1}, {"r", report.pair->right_index + 1},
                {"reindexed_anchors", report.pair->context.anchors}};
        }
        Json claims = Json::array();
        for (auto & c : report.claims)
            claims.push_back(claim_json(c));
        j["claims"] = claims;
        j["any_improvement"] = report.any_improvement();
        return j;
    }

    auto verdict_csv_header() -> string
    {
        return "graph6,preset,k,hypotheses_satisfied,conclusion_holds,status,failed_hypothesis,reason";
    }

    auto verdict_csv_row(const Verdict & verdict) -> string
    {
        string failed;
        for (auto & h : verdict.hypotheses)
            if (h.holds && ! *h.holds) {
                failed = h.name;
                break;
            }
        auto quoted = [](const string & s) {
            string out = "\"";
            for (char c : s)
                out += c == '"' ? string("\"\"") : string(1, c);
            return out + "\"";
        };
        string row = quoted(verdict.graph6) + "," + preset_name(verdict.preset.id) + "," + to_string(verdict.preset.k) + ",";
        row += string(verdict.hypotheses_satisfied ? "true" : "false") + ",";
        row += string(verdict.conclusion_holds ? (*verdict.conclusion_holds ? "true" : "false") : "") + ",";
        row += status_name(verdict.status) + "," + quoted(failed) + "," + quoted(verdict.reason);
        return row;
    }

    auto summary_csv(const SearchSummary & summary) -> string
    {
        return "graphs,hypotheses_met,conclusion_held,counterexamples,undecided,malformed\n" + to_string(summary.graphs) + "," +
            to_string(summary.hypotheses_met) + "," + to_string(summary.conclusion_held) + "," + to_string(summary.counterexamples) +
            "," + to_string(summary.undecided) + "," + to_string(summary.malformed) + "\n";
    }
}
