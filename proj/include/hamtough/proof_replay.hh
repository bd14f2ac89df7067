/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_PROOF_REPLAY_HH
#define HAMTOUGH_GUARD_PROOF_REPLAY_HH 1

#include <hamtough/cycles.hh>
#include <hamtough/graph.hh>
#include <hamtough/rational.hh>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/**
 * Executable replay of the exchange argument showing that a longest cycle C
 * of a suitable non-hamiltonian graph cannot exist. A hub h off C sees the
 * anchors v_1..v_d on C; their cycle successors u_i form the successor set
 * U. Each check below re-derives one step of the argument on a concrete
 * graph, and whenever a step would fail because C is not actually longest,
 * it builds the longer cycle that the argument uses.
 *
 * Indices are 1-based in reports and in the exchange formulas, and 0-based
 * in the stored vectors: anchors[0] is v_1. Index arithmetic is modulo d.
 */
namespace hamtough
{
    /// Raised when a context cannot be built: hub on the cycle, a hub neighbour off it, or an isolated hub.
    class ContextError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ProofContext
    {
    public:
        Graph graph;
        Cycle cycle;
        int hub = -1;
        int degree = 0;
        int k = 0;

        /// v_1..v_d in the cycle's orientation.
        std::vector<int> anchors;

        /// u_i = v_i^+.
        std::vector<int> successors;

        /// w_i = v_{i+1}^-.
        std::vector<int> gap_ends;

        VertexSet successor_set;

        /// Whether the graph is (P2 + kP1)-free and 1-tough, when known.
        std::optional<bool> free_known;
        std::optional<bool> one_tough_known;

        auto succ(int v) const -> int;
        auto pred(int v) const -> int;
        auto on_cycle(int v) const -> bool { return _position.at(v) != -1; }
        auto position(int v) const -> int { return _position.at(v); }

        /// v_i and u_i for 1-based i, taken modulo d.
        auto v(int i) const -> int;
        auto u(int i) const -> int;

        /// a, a^+, ..., b along the orientation.
        auto forward(int a, int b) const -> std::vector<int>;

        /// a, a^-, ..., b against the orientation.
        auto backward(int a, int b) const -> std::vector<int>;

        /// N_G(U): vertices outside U with a neighbour in U.
        auto successor_neighbourhood() const -> VertexSet;

        /// The same cycle and hub, with v_{1+shift} relabelled as v_1.
        auto rotated(int shift) const -> ProofContext;

    private:
        friend auto build_context(const Graph &, const Cycle &, int, int) -> ProofContext;

        ProofContext(Graph g, Cycle c) : graph(std::move(g)), cycle(std::move(c)) {}

        std::vector<int> _position;
    };

    /**
     * Requires h off the cycle, N(h) on the cycle and d >= 1; throws
     * ContextError otherwise. v_1 is the hub neighbour earliest in the cycle's
     * canonical sequence.
     */
    auto build_context(const Graph & g, const Cycle & c, int hub, int k) -> ProofContext;

    struct CycleAndHub
    {
        Cycle cycle;
        int hub;
    };

    /**
     * Over every longest cycle, in canonical order, and every vertex off it,
     * picks a pair whose off-cycle vertex has largest degree; ties go to the
     * earlier cycle, then the smaller vertex. nullopt for hamiltonian graphs
     * and forests.
     */
    auto choose_cycle_and_hub(const Graph & g, const CycleSearchOptions & options = {}) -> std::optional<CycleAndHub>;

    struct ClaimCheck
    {
        std::string name;
        bool holds;
        std::string detail;

        /// The failure triggered a cycle exchange, whether or not it produced a valid cycle.
        bool exchange = false;
    };

    struct ClaimReport
    {
        std::string id;
        bool holds = true;
        std::vector<ClaimCheck> checks;

        /// Vertices exhibiting the first failure, if any.
        std::vector<int> witness;

        std::vector<std::pair<std::string, std::int64_t>> values;

        /// A valid cycle strictly longer than the context's cycle.
        std::optional<Cycle> improvement;

        /// A valid cycle of the same length that leaves a higher-degree vertex off it.
        std::optional<Cycle> replacement;

        /// Which preconditions were verified and which were taken on trust.
        std::vector<std::string> notes;

        auto check(std::string name, bool ok, std::string detail = {}) -> void;
        auto value(std::string name, std::int64_t v) -> void;
        auto find_value(const std::string & name) const -> std::optional<std::int64_t>;
    };

    /// U + h is independent; an edge inside it yields a cycle one longer.
    auto check_successors_independent(const ProofContext & ctx) -> ClaimReport;

    /**
     * V - N(U) is independent (else an induced P2 + kP1 using k members of
     * U), |N(U)| >= n / 2, and N(U) lies on the cycle.
     */
    auto check_non_neighbours_independent(const ProofContext & ctx) -> ClaimReport;

    /// e_G(U, N(U)), counted directly.
    auto successor_edge_count(const ProofContext & ctx) -> std::int64_t;

    /**
     * Each y in N(U) sees at least d - k + 1 members of U, and d - k + 2 when
     * y is not a hub neighbour; e(U, N(U)) >= (d - k + 2)|N(U)| - d >= (d - k + 2) n / 2 - d.
     */
    auto check_successor_neighbour_counts(const ProofContext & ctx) -> ClaimReport;

    /**
     * d(u_i) <= d for every i, so e(U, N(U)) <= d^2. A successor of larger
     * degree yields an equal-length replacement cycle avoiding it.
     */
    auto check_successor_degrees(const ProofContext & ctx) -> ClaimReport;

    /// 2d(d + 1) / (d - k + 2); throws std::domain_error at d = k - 2.
    auto size_bound_function(std::int64_t d, std::int64_t k) -> Rational;

    /// Maximum of size_bound_function over integers d in [k, (k^2 - k - 2) / 2], or nullopt if that range is empty.
    auto max_size_bound(std::int64_t k) -> std::optional<Rational>;

    /// With n >= k^2 + k + 1, the edge-count bounds force d > (k^2 - k - 2) / 2.
    auto check_hub_degree_bound(const ProofContext & ctx) -> ClaimReport;

    /**
     * A cycle vertex x with x and x^+ both in N(U), plus the context
     * re-indexed so that x lies strictly between u_d and v_1.
     */
    struct ConsecutivePair
    {
        ProofContext context;
        int x;

        /// 0-based: the smallest i with u_{i+1} x an edge.
        int left_index;

        /// 0-based: the largest i with u_{i+1} x^+ an edge.
        int right_index;
    };

    /// The first such x in cycle order that is neither a hub neighbour nor in U.
    auto find_consecutive_pair(const ProofContext & ctx) -> std::optional<ConsecutivePair>;

    /// Holds iff a pair exists; otherwise reports the alternation count |V - N(U)| against n / 2.
    auto check_consecutive_pair_exists(const ProofContext & ctx) -> ClaimReport;

    /**
     * The containments and size bounds for N(x), N(x^+) and N(u_l^+) in U,
     * where l and r are the pair's indices. Each of the four exchanges is
     * attempted when its precondition holds.
     */
    auto check_consecutive_pair(const ConsecutivePair & pair) -> ClaimReport;

    /**
     * Evaluates l <= k - 1, r >= d - k + 1, d - k + 1 <= l - r <= 2k - d - 2,
     * 2d <= 3k - 3 and 2d > k^2 - k - 2 on the given 1-based values. holds
     * means the argument closes: no integer d satisfies the last two bounds
     * together.
     */
    auto final_arithmetic(std::int64_t k, std::int64_t d, std::int64_t l, std::int64_t r) -> ClaimReport;

    /// The smallest integer d with k^2 - k - 2 < 2d <= 3k - 3, if any.
    auto feasible_hub_degree(std::int64_t k) -> std::optional<std::int64_t>;

    enum class ReplayOutcome
    {
        Hamiltonian,
        Acyclic,
        NotEdgeDominating,
        Replayed,
        Undecided
    };

    auto outcome_name(ReplayOutcome outcome) -> std::string;

    struct ReplayReport
    {
        ReplayOutcome outcome = ReplayOutcome::Undecided;
        std::string message;
        std::optional<ProofContext> context;
        std::optional<ConsecutivePair> pair;
        std::vector<ClaimReport> claims;

        /// Whether any check produced a strictly longer cycle.
        auto any_improvement() const -> bool;
    };

    struct ReplayOptions
    {
        CycleSearchOptions cycles;

        /// Establish freeness and 1-toughness so reports can say they were verified.
        bool check_hypotheses = true;
    };

    /// Chooses (C, h), builds the context and runs every check in order.
    auto replay(const Graph & g, int k, const ReplayOptions & options = {}) -> ReplayReport;

    /// Runs every check on a given context, in order.
    auto replay_context(const ProofContext & ctx) -> ReplayReport;
}

#endif
