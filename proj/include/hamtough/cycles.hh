/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_CYCLES_HH
#define HAMTOUGH_GUARD_CYCLES_HH 1

#include <hamtough/graph.hh>
#include <hamtough/limits.hh>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hamtough
{
    /**
     * A simple cycle of length at least 3, stored in canonical form: it
     * starts at its smallest vertex and the second vertex is smaller than the
     * last. The canonical sequence also fixes the orientation used when
     * talking about successors and predecessors.
     */
    class Cycle
    {
    public:
        /// Validates the closed walk against g and canonicalises it; throws std::invalid_argument.
        static auto from_sequence(const Graph & g, std::vector<int> sequence) -> Cycle;

        /// Rotation and reflection normal form of a vertex sequence (no validation).
        static auto canonical_form(std::vector<int> sequence) -> std::vector<int>;

        auto vertices() const noexcept -> const std::vector<int> & { return _sequence; }
        auto length() const noexcept -> int { return static_cast<int>(_sequence.size()); }
        auto vertex_set() const noexcept -> VertexSet;

        auto operator<=>(const Cycle &) const = default;

    private:
        explicit Cycle(std::vector<int> sequence) : _sequence(std::move(sequence)) {}

        std::vector<int> _sequence;
    };

    /// Whether sequence, closed up, is a simple cycle of g of length >= 3.
    auto is_cycle_of(const Graph & g, std::span<const int> sequence) -> bool;

    struct CycleSearchOptions
    {
        /// Hamiltonicity uses the subset dynamic programme up to this order.
        int max_order_hamiltonian_dp = 24;

        /// Circumference uses the subset dynamic programme up to this order.
        int max_order_longest_dp = 20;

        /// Backtracking searches refuse graphs above this order.
        int max_order_backtracking = Graph::max_order;

        SearchLimits limits;
    };

    /// Dispatches to the subset dynamic programme or to backtracking by order.
    auto find_hamiltonian_cycle(const Graph & g, const CycleSearchOptions & options = {}) -> std::optional<Cycle>;

    /// Held-Karp style reachability over subsets containing vertex 0; order at most 24.
    auto find_hamiltonian_cycle_dp(const Graph & g) -> std::optional<Cycle>;

    /// Depth-first extension from vertex 0 with degree and reachability cutoffs.
    auto find_hamiltonian_cycle_backtracking(const Graph & g, const SearchLimits & limits = {}) -> std::optional<Cycle>;

    /// A maximum-length cycle, or nullopt for forests.
    auto find_longest_cycle(const Graph & g, const CycleSearchOptions & options = {}) -> std::optional<Cycle>;

    /// Length of a longest cycle, 0 for forests.
    auto circumference(const Graph & g, const CycleSearchOptions & options = {}) -> int;

    /**
     * Streams every cycle of exactly `length` vertices, each once, in
     * increasing canonical order. f returns false to stop early. Returns
     * false if stopped by f.
     */
    auto for_each_cycle_of_length(const Graph & g, int length, const std::function<bool(const Cycle &)> & f,
        const SearchLimits & limits = {}) -> bool;

    struct LongestCycles
    {
        int length = 0;
        std::vector<Cycle> cycles;
        bool truncated = false;
    };

    /// All longest cycles in canonical order, at most cap of them.
    auto enumerate_longest_cycles(const Graph & g, std::size_t cap, const CycleSearchOptions & options = {}) -> LongestCycles;

    struct EdgeDomination
    {
        bool dominating = true;

        /// A component of G - V(C) with at least two vertices, when not dominating.
        std::optional<VertexSet> component;
    };

    /// Throws std::invalid_argument if c is not a cycle of g.
    auto is_edge_dominating(const Graph & g, const Cycle & c) -> EdgeDomination;

    /**
     * The first longest cycle, in canonical order, that is not edge
     * dominating. Hamiltonian graphs return nullopt without enumeration.
     */
    auto find_non_dominating_longest_cycle(const Graph & g, const CycleSearchOptions & options = {}) -> std::optional<Cycle>;
}

#endif
