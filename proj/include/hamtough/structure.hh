/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_STRUCTURE_HH
#define HAMTOUGH_GUARD_STRUCTURE_HH 1

#include <hamtough/graph.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace hamtough
{
    /// An induced copy of P2 + kP1: the edge plus k isolated vertices.
    struct FreenessWitness
    {
        Edge edge;
        VertexSet isolated;
    };

    struct FreenessResult
    {
        bool free = true;
        std::optional<FreenessWitness> witness;
    };

    /**
     * Decides whether g has no induced P2 + kP1, for k >= 1. For each edge
     * xy, looks for k independent vertices outside N[x] and N[y]. The
     * witness is the first such edge with the lexicographically smallest
     * isolated part. Throws std::invalid_argument for k < 1.
     */
    auto is_p2_kp1_free(const Graph & g, int k) -> FreenessResult;

    /// Whether edge + isolated induces exactly P2 + |isolated| P1.
    auto induces_p2_kp1(const Graph & g, Edge edge, VertexSet isolated) -> bool;

    /**
     * A vertex v and an independent set X such that v sees some but fewer than
     * |X| - k + 1 members of X. In a graph without induced P2 + kP1 there are none.
     */
    struct NeighbourBoundViolation
    {
        int vertex;
        VertexSet independent_set;
        int neighbours_in_set;
        int required;
    };

    struct NeighbourBoundOptions
    {
        /**
         * Up to this order every independent set is checked; above it only
         * maximal ones. A violation at X persists in every independent
         * superset of X, so the violation-free verdict is the same either way.
         */
        int all_sets_max_order = 12;

        /// Stop after this many violations; 0 collects all of them.
        std::size_t max_violations = 0;
    };

    auto check_independent_neighbour_bound(const Graph & g, int k, const NeighbourBoundOptions & options = {})
        -> std::vector<NeighbourBoundViolation>;

    /// Calls f on every maximal independent set (Bron-Kerbosch with pivoting on the complement).
    auto for_each_maximal_independent_set(const Graph & g, const std::function<bool(VertexSet)> & f) -> void;

    /// Calls f on every independent set, including the empty one.
    auto for_each_independent_set(const Graph & g, const std::function<bool(VertexSet)> & f) -> void;

    /// Length of a shortest cycle, or nullopt for forests.
    auto girth(const Graph & g) -> std::optional<int>;

    /// The Petersen graph on the usual labelling: outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram.
    auto petersen_graph() -> Graph;

    /// Isomorphism to the Petersen graph, by invariant filtering then explicit mapping search.
    auto is_petersen(const Graph & g) -> bool;

    /// An isomorphism from the Petersen graph's standard labelling onto g, if one exists.
    auto petersen_isomorphism(const Graph & g) -> std::optional<std::vector<int>>;
}

#endif
