/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/invariants.hh>
#include <hamtough/proof_replay.hh>
#include <hamtough/structure.hh>

#include <algorithm>
#include <initializer_list>

using std::int64_t;
using std::initializer_list;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace hamtough
{
    namespace
    {
        auto describe(const vector<int> & vertices) -> string
        {
            string result = "[";
            for (std::size_t i = 0; i < vertices.size(); ++i)
                result += (i ? " " : "") + to_string(vertices[i]);
            return result + "]";
        }

        auto join(initializer_list<vector<int>> pieces) -> vector<int>
        {
            vector<int> result;
            for (auto & piece : pieces)
                result.insert(result.end(), piece.begin(), piece.end());
            return result;
        }

        /// The closing vertex of a written-out cycle repeats its first one; drop it.
        auto close_up(vector<int> sequence) -> vector<int>
        {
            if (sequence.size() > 1 && sequence.front() == sequence.back())
                sequence.pop_back();
            return sequence;
        }

        auto is_forest(const Graph & g) -> bool
        {
            return g.size() == g.order() - count_components_within(g, g.vertices());
        }

        /// Validates a constructed sequence; returns it as a cycle only if strictly longer than the context's.
        auto longer_cycle(const ProofContext & ctx, const vector<int> & sequence) -> optional<Cycle>
        {
            if (static_cast<int>(sequence.size()) <= ctx.cycle.length() || ! is_cycle_of(ctx.graph, sequence))
                return std::nullopt;
            return Cycle::from_sequence(ctx.graph, sequence);
        }

        /// Records an exchange: whether its precondition held, and what the construction produced.
        auto record_exchange(ClaimReport & report, const ProofContext & ctx, const string & name, bool fires,
            const vector<int> & sequence, const string & why) -> void
        {
            if (! fires) {
                report.check(name, true);
                return;
            }
            auto cycle = longer_cycle(ctx, sequence);
            string detail = why + "; construction " + describe(sequence);
            if (cycle) {
                detail += " is a cycle of length " + to_string(cycle->length());
                if (! report.improvement)
                    report.improvement = cycle;
            }
            else
                detail += " is not a longer cycle of the graph";
            report.check(name, false, detail);
            report.checks.back().exchange = true;
        }

        auto successor_index_set(const ProofContext & ctx, VertexSet s) -> vector<int>
        {
            vector<int> indices;
            for (int i = 1; i <= ctx.degree; ++i)
                if (s.contains(ctx.u(i)))
                    indices.push_back(i);
            return indices;
        }

        auto hypothesis_notes(ClaimReport & report, const ProofContext & ctx) -> void
        {
            auto note = [&](const optional<bool> & known, const string & what) {
                if (! known)
                    report.notes.push_back(what + " assumed, not checked");
                else
                    report.notes.push_back(what + (*known ? " verified" : " checked and fails"));
            };
            note(ctx.free_known, "P2 + kP1 freeness");
            note(ctx.one_tough_known, "1-toughness");
        }
    }

    auto ProofContext::succ(int v) const -> int
    {
        auto & seq = cycle.vertices();
        return seq[(position(v) + 1) % seq.size()];
    }

    auto ProofContext::pred(int v) const -> int
    {
        auto & seq = cycle.vertices();
        return seq[(position(v) + seq.size() - 1) % seq.size()];
    }

    auto ProofContext::v(int i) const -> int
    {
        return anchors[((i - 1) % degree + degree) % degree];
    }

    auto ProofContext::u(int i) const -> int
    {
        return successors[((i - 1) % degree + degree) % degree];
    }

    auto ProofContext::forward(int a, int b) const -> vector<int>
    {
        vector<int> result{a};
        for (int c = a; c != b;) {
            c = succ(c);
            result.push_back(c);
        }
        return result;
    }

    auto ProofContext::backward(int a, int b) const -> vector<int>
    {
        vector<int> result{a};
        for (int c = a; c != b;) {
            c = pred(c);
            result.push_back(c);
        }
        return result;
    }

    auto ProofContext::successor_neighbourhood() const -> VertexSet
    {
        return set_neighbourhood(graph, successor_set);
    }

    auto ProofContext::rotated(int shift) const -> ProofContext
    {
        ProofContext result = *this;
        int d = degree;
        shift = ((shift % d) + d) % d;
        std::rotate(result.anchors.begin(), result.anchors.begin() + shift, result.anchors.end());
        std::rotate(result.successors.begin(), result.successors.begin() + shift, result.successors.end());
        std::rotate(result.gap_ends.begin(), result.gap_ends.begin() + shift, result.gap_ends.end());
        return result;
    }

    auto build_context(const Graph & g, const Cycle & c, int hub, int k) -> ProofContext
    {
        if (! is_cycle_of(g, c.vertices()))
            throw ContextError("cycle does not belong to the graph");
        if (hub < 0 || hub >= g.order())
            throw ContextError("hub " + to_string(hub) + " is not a vertex");

        ProofContext ctx{g, c};
        ctx.hub = hub;
        ctx.k = k;
        ctx._position.assign(g.order(), -1);
        for (int i = 0; i < c.length(); ++i)
            ctx._position[c.vertices()[i]] = i;

        if (ctx.on_cycle(hub))
            throw ContextError("hub " + to_string(hub) + " lies on the cycle");
        auto hub_neighbours = g.neighbours(hub);
        if (! hub_neighbours.subset_of(c.vertex_set()))
            throw ContextError("hub " + to_string(hub) + " has a neighbour off the cycle, so the cycle is not edge dominating");
        if (hub_neighbours.empty())
            throw ContextError("hub " + to_string(hub) + " has no neighbours");

        ctx.degree = hub_neighbours.size();
        for (int v : c.vertices())
            if (hub_neighbours.contains(v))
                ctx.anchors.push_back(v);
        for (int i = 0; i < ctx.degree; ++i) {
            ctx.successors.push_back(ctx.succ(ctx.anchors[i]));
            ctx.gap_ends.push_back(ctx.pred(ctx.anchors[(i + 1) % ctx.degree]));
            ctx.successor_set.insert(ctx.successors.back());
        }
        return ctx;
    }

    auto choose_cycle_and_hub(const Graph & g, const CycleSearchOptions & options) -> optional<CycleAndHub>
    {
        if (is_forest(g) || find_hamiltonian_cycle(g, options))
            return std::nullopt;

        int length = circumference(g, options);
        int ceiling = 0;
        for (int v : g.vertices())
            ceiling = std::max(ceiling, g.degree(v));

        optional<CycleAndHub> best;
        int best_degree = -1;
        for_each_cycle_of_length(g, length, [&](const Cycle & c) {
            for (int v : g.vertices() - c.vertex_set())
                if (g.degree(v) > best_degree) {
                    best_degree = g.degree(v);
                    best = CycleAndHub{c, v};
                }
            return best_degree < ceiling;
        }, options.limits);
        return best;
    }

    auto ClaimReport::check(string name, bool ok, string detail) -> void
    {
        holds = holds && ok;
        checks.push_back(ClaimCheck{std::move(name), ok, std::move(detail)});
    }

    auto ClaimReport::value(string name, int64_t v) -> void
    {
        values.emplace_back(std::move(name), v);
    }

    auto ClaimReport::find_value(const string & name) const -> optional<int64_t>
    {
        for (auto & [n, v] : values)
            if (n == name)
                return v;
        return std::nullopt;
    }

    auto check_successors_independent(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "successors_independent";
        report.value("d", ctx.degree);
        auto & g = ctx.graph;
        int h = ctx.hub, d = ctx.degree;

        int seen_by_hub = -1;
        for (int i = 1; i <= d && seen_by_hub == -1; ++i)
            if (g.adjacent(h, ctx.u(i)))
                seen_by_hub = i;
        if (seen_by_hub != -1) {
            int i = seen_by_hub;
            report.witness = {h, ctx.u(i)};
            record_exchange(report, ctx, "hub sees no successor", true, join({{h}, ctx.forward(ctx.u(i), ctx.v(i))}),
                "hub adjacent to u_" + to_string(i));
        }
        else
            report.check("hub sees no successor", true);

        optional<std::pair<int, int>> crossing;
        for (int i = 1; i <= d && ! crossing; ++i)
            for (int j = i + 1; j <= d && ! crossing; ++j)
                if (g.adjacent(ctx.u(i), ctx.u(j)))
                    crossing = std::pair{i, j};
        if (crossing) {
            auto [i, j] = *crossing;
            if (report.witness.empty())
                report.witness = {ctx.u(i), ctx.u(j)};
            record_exchange(report, ctx, "successors pairwise nonadjacent", true,
                join({{h}, ctx.backward(ctx.v(j), ctx.u(i)), ctx.forward(ctx.u(j), ctx.v(i))}),
                "u_" + to_string(i) + " adjacent to u_" + to_string(j));
        }
        else
            report.check("successors pairwise nonadjacent", true);
        return report;
    }

    auto check_non_neighbours_independent(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "non_neighbours_independent";
        hypothesis_notes(report, ctx);
        auto & g = ctx.graph;
        int n = g.order(), d = ctx.degree, k = ctx.k, h = ctx.hub;
        auto nu = ctx.successor_neighbourhood();
        auto outside = g.vertices() - nu;
        report.value("n", n);
        report.value("N(U)", nu.size());
        report.value("V - N(U)", outside.size());

        auto first_successors = [&](VertexSet avoid, int count) {
            VertexSet chosen;
            for (int i = 1; i <= d && chosen.size() < count; ++i)
                if (! avoid.contains(ctx.u(i)))
                    chosen.insert(ctx.u(i));
            return chosen;
        };

        optional<Edge> inside;
        for (auto e : g.edges())
            if (outside.contains(e.u) && outside.contains(e.v)) {
                inside = e;
                break;
            }
        if (inside) {
            auto [x, y] = *inside;
            string detail = "edge " + to_string(x) + " " + to_string(y) + " avoids N(U)";
            if (d >= k) {
                auto isolated = first_successors(VertexSet::of({x, y}), k);
                bool pattern = isolated.size() == k && induces_p2_kp1(g, *inside, isolated);
                detail += pattern ? "; with " + describe(isolated.to_vector()) + " it induces P2 + kP1"
                                  : "; the first k successors do not complete an induced P2 + kP1";
                report.witness = join({{x, y}, isolated.to_vector()});
            }
            else {
                detail += "; fewer than k successors, so no P2 + kP1 from U";
                report.witness = {x, y};
            }
            report.check("vertices outside N(U) independent", false, detail);
        }
        else
            report.check("vertices outside N(U) independent", true);

        if (2 * nu.size() >= n)
            report.check("|N(U)| >= n / 2", true);
        else {
            string detail = "|N(U)| = " + to_string(nu.size()) + " < n / 2";
            if (is_independent(g, outside))
                detail += "; V - N(U) is independent of size " + to_string(outside.size()) + " > n / 2, so the graph is not 1-tough";
            if (report.witness.empty())
                report.witness = outside.to_vector();
            report.check("|N(U)| >= n / 2", false, detail);
        }

        auto off_cycle = nu - ctx.cycle.vertex_set();
        if (off_cycle.empty())
            report.check("N(U) lies on the cycle", true);
        else {
            int y = off_cycle.first();
            auto seen = successor_index_set(ctx, g.neighbours(y));
            if (report.witness.empty())
                report.witness = {y};
            if (y == h)
                report.check("N(U) lies on the cycle", false, "the hub itself is adjacent to a successor");
            else if (seen.size() >= 2) {
                int i = seen[0], j = seen[1];
                record_exchange(report, ctx, "N(U) lies on the cycle", true,
                    join({{h}, ctx.backward(ctx.v(j), ctx.u(i)), {y}, ctx.forward(ctx.u(j), ctx.v(i))}),
                    "off-cycle vertex " + to_string(y) + " adjacent to u_" + to_string(i) + " and u_" + to_string(j));
            }
            else {
                int ui = ctx.u(seen[0]);
                auto isolated = first_successors(VertexSet::single(ui), k - 1).with(h);
                bool pattern = isolated.size() == k && induces_p2_kp1(g, Edge{std::min(y, ui), std::max(y, ui)}, isolated);
                report.check("N(U) lies on the cycle", false,
                    "off-cycle vertex " + to_string(y) + " sees only u_" + to_string(seen[0]) + "; with "
                        + describe(isolated.to_vector()) + (pattern ? " it induces P2 + kP1" : " it does not induce P2 + kP1"));
            }
        }
        return report;
    }

    auto successor_edge_count(const ProofContext & ctx) -> int64_t
    {
        auto nu = ctx.successor_neighbourhood();
        int64_t count = 0;
        for (int u : ctx.successor_set)
            count += (ctx.graph.neighbours(u) & nu).size();
        return count;
    }

    auto check_successor_neighbour_counts(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "successor_neighbour_counts";
        hypothesis_notes(report, ctx);
        auto & g = ctx.graph;
        int64_t n = g.order(), d = ctx.degree, k = ctx.k;
        auto nu = ctx.successor_neighbourhood();
        auto hub_neighbours = g.neighbours(ctx.hub);

        optional<int> offender;
        string detail;
        for (int y : nu) {
            int64_t count = (g.neighbours(y) & ctx.successor_set).size();
            int64_t need = d - k + (hub_neighbours.contains(y) ? 1 : 2);
            if (count < need) {
                offender = y;
                detail = "vertex " + to_string(y) + " sees " + to_string(count) + " successors, needs " + to_string(need);
                break;
            }
        }
        if (offender)
            report.witness = {*offender};
        report.check("each y in N(U) sees enough successors", ! offender, detail);

        int64_t e = successor_edge_count(ctx);
        int64_t size = nu.size();
        report.value("e(U, N(U))", e);
        report.value("N(U)", size);
        report.value("lower bound", (d - k + 2) * size - d);
        report.check("e(U, N(U)) >= (d - k + 2)|N(U)| - d", e >= (d - k + 2) * size - d);
        report.check("e(U, N(U)) >= (d - k + 2) n / 2 - d", 2 * e >= (d - k + 2) * n - 2 * d);
        return report;
    }

    auto check_successor_degrees(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "successor_degrees";
        auto & g = ctx.graph;
        int d = ctx.degree, h = ctx.hub;
        report.value("d", d);

        int heavy = -1;
        for (int i = 1; i <= d && heavy == -1; ++i)
            if (g.degree(ctx.u(i)) > d)
                heavy = i;

        if (heavy == -1)
            report.check("every successor has degree at most d", true);
        else {
            int i = heavy, ui = ctx.u(i), next = ctx.succ(ui);
            report.witness = {ui};
            string detail = "u_" + to_string(i) + " has degree " + to_string(g.degree(ui));
            optional<vector<int>> sequence;
            if (next == ctx.v(i + 1))
                sequence = join({ctx.backward(ctx.v(i), ctx.v(i + 1)), {h}});
            else {
                for (int j = 1; j <= d && ! sequence; ++j)
                    if (j != i && g.adjacent(ctx.u(j), next))
                        sequence = join({ctx.backward(ctx.v(i), ctx.u(j)), ctx.forward(next, ctx.v(j)), {h}});
                if (! sequence)
                    detail += "; no successor other than u_" + to_string(i) + " sees its successor on the cycle";
            }
            if (sequence) {
                if (is_cycle_of(g, *sequence) && static_cast<int>(sequence->size()) == ctx.cycle.length()) {
                    report.replacement = Cycle::from_sequence(g, *sequence);
                    detail += "; equally long cycle " + describe(report.replacement->vertices()) + " leaves it off with degree above d";
                }
                else
                    detail += "; construction " + describe(*sequence) + " is not an equally long cycle";
            }
            report.check("every successor has degree at most d", false, detail);
        }

        int64_t e = successor_edge_count(ctx);
        report.value("e(U, N(U))", e);
        report.check("e(U, N(U)) <= d^2", e <= int64_t{d} * d);
        return report;
    }

    auto size_bound_function(int64_t d, int64_t k) -> Rational
    {
        if (d - k + 2 == 0)
            throw std::domain_error("size bound undefined at d = k - 2");
        return Rational(2 * d * (d + 1), d - k + 2);
    }

    auto max_size_bound(int64_t k) -> optional<Rational>
    {
        int64_t numerator = k * k - k - 2;
        int64_t high = numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
        optional<Rational> best;
        for (int64_t d = k; d <= high; ++d) {
            auto f = size_bound_function(d, k);
            if (! best || f > *best)
                best = f;
        }
        return best;
    }

    auto check_hub_degree_bound(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "hub_degree_bound";
        int64_t n = ctx.graph.order(), d = ctx.degree, k = ctx.k;
        int64_t threshold = k * k - k - 2;
        report.value("n", n);
        report.value("d", d);
        report.value("k^2 - k - 2", threshold);

        if (d - k + 2 > 0) {
            auto f = size_bound_function(d, k);
            report.check("n <= 2d(d + 1) / (d - k + 2)", Rational(n) <= f, "bound " + f.to_string());
        }
        else
            report.notes.push_back("d - k + 2 <= 0, so the edge counts give no order bound");

        if (auto best = max_size_bound(k))
            report.check("maximum of the bound over [k, (k^2 - k - 2) / 2] is k^2 + k", *best == Rational(k * k + k),
                "maximum " + best->to_string());
        else
            report.notes.push_back("the range [k, (k^2 - k - 2) / 2] is empty");

        if (n >= k * k + k + 1)
            report.check("2d > k^2 - k - 2", 2 * d > threshold);
        else
            report.notes.push_back("order below k^2 + k + 1, so the lower bound on d does not apply");
        return report;
    }

    auto find_consecutive_pair(const ProofContext & ctx) -> optional<ConsecutivePair>
    {
        auto & g = ctx.graph;
        auto nu = ctx.successor_neighbourhood();
        auto hub_neighbours = g.neighbours(ctx.hub);
        auto excluded = hub_neighbours | ctx.successor_set;

        for (int x : ctx.cycle.vertices()) {
            int next = ctx.succ(x);
            if (! nu.contains(x) || ! nu.contains(next) || excluded.contains(x))
                continue;

            int anchor = ctx.pred(x);
            while (! hub_neighbours.contains(anchor))
                anchor = ctx.pred(anchor);
            int index = static_cast<int>(std::find(ctx.anchors.begin(), ctx.anchors.end(), anchor) - ctx.anchors.begin());

            // x now sits between u_d and v_1
            auto rotated = ctx.rotated(index + 1);
            int left = -1, right = -1;
            for (int j = 0; j < rotated.degree; ++j) {
                if (left == -1 && g.adjacent(rotated.successors[j], x))
                    left = j;
                if (g.adjacent(rotated.successors[j], next))
                    right = j;
            }
            return ConsecutivePair{std::move(rotated), x, left, right};
        }
        return std::nullopt;
    }

    auto check_consecutive_pair_exists(const ProofContext & ctx) -> ClaimReport
    {
        ClaimReport report;
        report.id = "consecutive_pair";
        auto nu = ctx.successor_neighbourhood();
        int n = ctx.graph.order();

        if (auto pair = find_consecutive_pair(ctx)) {
            report.value("x", pair->x);
            report.value("l", pair->left_index + 1);
            report.value("r", pair->right_index + 1);
            report.check("some cycle vertex x has x and x+ in N(U)", true);
            return report;
        }

        int adjacent_pairs = 0;
        for (int x : ctx.cycle.vertices())
            if (nu.contains(x) && nu.contains(ctx.succ(x)))
                ++adjacent_pairs;
        int outside = (ctx.graph.vertices() - nu).size();
        report.value("V - N(U)", outside);
        report.value("n", n);
        report.value("pairs excluded as hub neighbours or successors", adjacent_pairs);
        report.check("some cycle vertex x has x and x+ in N(U)", false,
            2 * outside > n ? "membership alternates, leaving |V - N(U)| > n / 2" : "no usable pair, and |V - N(U)| <= n / 2");
        return report;
    }

    auto check_consecutive_pair(const ConsecutivePair & pair) -> ClaimReport
    {
        ClaimReport report;
        report.id = "consecutive_pair_structure";
        hypothesis_notes(report, pair.context);
        auto & ctx = pair.context;
        auto & g = ctx.graph;
        int d = ctx.degree, k = ctx.k, h = ctx.hub;
        int l = pair.left_index + 1, r = pair.right_index + 1;
        int x = pair.x, x_next = ctx.succ(x);
        int ul = ctx.u(l), ul_next = ctx.succ(ul);
        auto hub_neighbours = g.neighbours(h);

        auto seen_x = successor_index_set(ctx, g.neighbours(x));
        auto seen_x_next = successor_index_set(ctx, g.neighbours(x_next));
        auto seen_ul_next = successor_index_set(ctx, g.neighbours(ul_next));
        report.value("x", x);
        report.value("x+", x_next);
        report.value("l", l);
        report.value("r", r);
        report.value("u_l+", ul_next);
        report.value("N(x) in U", static_cast<int64_t>(seen_x.size()));
        report.value("N(x+) in U", static_cast<int64_t>(seen_x_next.size()));
        report.value("N(u_l+) in U", static_cast<int64_t>(seen_ul_next.size()));

        report.check("x is not a hub neighbour", ! hub_neighbours.contains(x));
        report.check("N(x) in U lies within u_l..u_d", seen_x.empty() || seen_x.front() >= l);
        report.check("|N(x) in U| >= d - k + 2", static_cast<int>(seen_x.size()) >= d - k + 2);
        report.check("N(x+) in U lies within u_1..u_r", seen_x_next.empty() || seen_x_next.back() <= r);
        report.check("|N(x+) in U| >= d - k + 1", static_cast<int>(seen_x_next.size()) >= d - k + 1);

        record_exchange(report, ctx, "l >= r", l < r,
            close_up(join({{x}, ctx.forward(ul, ctx.v(r)), {h}, ctx.backward(ctx.v(l), x_next), ctx.forward(ctx.u(r), x)})),
            "l < r");

        auto common = join({ctx.backward(ctx.v(r), x_next), ctx.forward(ctx.u(r), ul)});
        record_exchange(report, ctx, "u_l+ is not a hub neighbour", hub_neighbours.contains(ul_next),
            join({{h}, common, ctx.backward(x, ul_next)}), "u_l+ adjacent to the hub");

        optional<int> low_j, high_j;
        for (int j : seen_ul_next) {
            if (j <= r - 1 && ! low_j)
                low_j = j;
            if (j >= l + 1 && ! high_j)
                high_j = j;
        }
        if (low_j) {
            int j = *low_j;
            record_exchange(report, ctx, "u_l+ sees no u_j with j < r", true,
                join({{h}, ctx.backward(ctx.v(j), x_next), ctx.forward(ctx.u(r), ul), ctx.backward(x, ul_next), ctx.forward(ctx.u(j), ctx.v(r))}),
                "u_l+ adjacent to u_" + to_string(j));
        }
        else
            report.check("u_l+ sees no u_j with j < r", true);
        if (high_j) {
            int j = *high_j;
            record_exchange(report, ctx, "u_l+ sees no u_j with j > l", true,
                join({{h}, common, ctx.backward(x, ctx.u(j)), ctx.forward(ul_next, ctx.v(j))}),
                "u_l+ adjacent to u_" + to_string(j));
        }
        else
            report.check("u_l+ sees no u_j with j > l", true);

        report.check("|N(u_l+) in U| >= d - k + 2", static_cast<int>(seen_ul_next.size()) >= d - k + 2);
        return report;
    }

    auto feasible_hub_degree(int64_t k) -> optional<int64_t>
    {
        int64_t numerator = k * k - k - 2;
        int64_t floor_half = numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
        int64_t d = floor_half + 1;
        if (2 * d <= 3 * k - 3)
            return d;
        return std::nullopt;
    }

    auto final_arithmetic(int64_t k, int64_t d, int64_t l, int64_t r) -> ClaimReport
    {
        ClaimReport report;
        report.id = "final_arithmetic";
        report.value("k", k);
        report.value("d", d);
        report.value("l", l);
        report.value("r", r);

        auto add = [&](string name, bool ok) { report.checks.push_back(ClaimCheck{std::move(name), ok, {}}); };
        add("l <= k - 1", l <= k - 1);
        add("r >= d - k + 1", r >= d - k + 1);
        add("d - k + 1 <= l - r", d - k + 1 <= l - r);
        add("l - r <= 2k - d - 2", l - r <= 2 * k - d - 2);
        add("2d <= 3k - 3", 2 * d <= 3 * k - 3);
        add("2d > k^2 - k - 2", 2 * d > k * k - k - 2);
        add("(k - 2)^2 > 3", (k - 2) * (k - 2) > 3);

        auto window = feasible_hub_degree(k);
        report.value("hub degree window empty", window ? 0 : 1);
        if (window)
            report.notes.push_back("d = " + to_string(*window) + " satisfies both bounds on the hub degree");
        add("no integer d with k^2 - k - 2 < 2d <= 3k - 3", ! window);
        report.holds = ! window;
        return report;
    }

    auto outcome_name(ReplayOutcome outcome) -> string
    {
        switch (outcome) {
            case ReplayOutcome::Hamiltonian: return "hamiltonian";
            case ReplayOutcome::Acyclic: return "acyclic";
            case ReplayOutcome::NotEdgeDominating: return "not_edge_dominating";
            case ReplayOutcome::Replayed: return "replayed";
            case ReplayOutcome::Undecided: return "undecided";
        }
        return "undecided";
    }

    auto ReplayReport::any_improvement() const -> bool
    {
        return std::any_of(claims.begin(), claims.end(), [](const ClaimReport & c) { return c.improvement.has_value(); });
    }

    auto replay_context(const ProofContext & ctx) -> ReplayReport
    {
        ReplayReport report;
        report.outcome = ReplayOutcome::Replayed;
        report.context = ctx;
        report.claims.push_back(check_successors_independent(ctx));
        report.claims.push_back(check_non_neighbours_independent(ctx));
        report.claims.push_back(check_successor_neighbour_counts(ctx));
        report.claims.push_back(check_successor_degrees(ctx));
        report.claims.push_back(check_hub_degree_bound(ctx));
        report.claims.push_back(check_consecutive_pair_exists(ctx));
        report.pair = find_consecutive_pair(ctx);
        if (report.pair) {
            report.claims.push_back(check_consecutive_pair(*report.pair));
            report.claims.push_back(final_arithmetic(ctx.k, ctx.degree, report.pair->left_index + 1, report.pair->right_index + 1));
        }
        return report;
    }

    auto replay(const Graph & g, int k, const ReplayOptions & options) -> ReplayReport
    {
        ReplayReport report;
        try {
            if (is_forest(g)) {
                report.outcome = ReplayOutcome::Acyclic;
                report.message = "acyclic; no longest cycle";
                return report;
            }
            if (find_hamiltonian_cycle(g, options.cycles)) {
                report.outcome = ReplayOutcome::Hamiltonian;
                report.message = "hamiltonian; replay vacuous";
                return report;
            }

            auto choice = choose_cycle_and_hub(g, options.cycles);
            if (! choice) {
                report.message = "no longest cycle with an off-cycle vertex";
                return report;
            }

            optional<ProofContext> ctx;
            try {
                ctx = build_context(g, choice->cycle, choice->hub, k);
            }
            catch (const ContextError & e) {
                report.outcome = ReplayOutcome::NotEdgeDominating;
                report.message = e.what();
                return report;
            }

            if (options.check_hypotheses) {
                if (k >= 1)
                    ctx->free_known = is_p2_kp1_free(g, k).free;
                if (g.order() <= ToughnessOptions{}.max_exhaustive_order)
                    ctx->one_tough_known = is_t_tough(g, Rational(1)).tough;
            }

            report = replay_context(*ctx);
            report.message = "replayed on a longest cycle of length " + to_string(ctx->cycle.length()) + " with hub "
                + to_string(ctx->hub);
        }
        catch (const ResourceLimitExceeded & e) {
            report = ReplayReport{};
            report.outcome = ReplayOutcome::Undecided;
            report.message = e.what();
        }
        return report;
    }
}
