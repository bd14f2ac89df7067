/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_INVARIANTS_HH
#define HAMTOUGH_GUARD_INVARIANTS_HH 1

#include <hamtough/graph.hh>
#include <hamtough/limits.hh>
#include <hamtough/rational.hh>

#include <optional>

namespace hamtough
{
    struct ToughnessOptions
    {
        /// Graphs above this order are refused unless bounded search is allowed.
        int max_exhaustive_order = 24;

        /**
         * Beyond max_exhaustive_order, search cuts by increasing size with an
         * incumbent seeded from a minimum vertex cut and a size cutoff using
         * the independence number. Still exact, just not guaranteed fast.
         */
        bool allow_bounded_search = false;

        SearchLimits limits;
    };

    struct ToughnessResult
    {
        /// Only complete graphs (including K0, K1, K2) are infinitely tough.
        bool infinite = false;
        Rational value;

        /// A cut S with omega(G - S) >= 2 and |S| / omega(G - S) == value.
        std::optional<VertexSet> witness;
        int witness_components = 0;
    };

    /// Exact toughness. Disconnected graphs have toughness 0, witnessed by the empty cut.
    auto toughness(const Graph & g, const ToughnessOptions & options = {}) -> ToughnessResult;

    struct TToughResult
    {
        bool tough = true;

        /// When not tough: |cut| < t * omega(G - cut), with omega >= 2.
        std::optional<VertexSet> violating_cut;
        int components = 0;
    };

    /// Decides tau(g) >= t, stopping at the first violating cut. t must be nonnegative.
    auto is_t_tough(const Graph & g, const Rational & t, const ToughnessOptions & options = {}) -> TToughResult;

    /// kappa(g): n-1 for complete graphs, 0 when disconnected or n <= 1.
    auto vertex_connectivity(const Graph & g) -> int;

    /// kappa(g) >= k, exiting early once k disjoint paths are found for each checked pair.
    auto is_k_connected(const Graph & g, int k) -> bool;

    /// A minimum separating set, or nullopt for complete graphs.
    auto minimum_vertex_cut(const Graph & g) -> std::optional<VertexSet>;

    /**
     * Maximum number of internally vertex-disjoint s-t paths, for distinct
     * nonadjacent s and t, by unit-capacity augmentation on the split graph.
     * Stops once limit paths are found when limit > 0.
     */
    auto max_vertex_disjoint_paths(const Graph & g, int s, int t, int limit = 0) -> int;

    struct IndependentSetResult
    {
        int size = 0;

        /// Lexicographically smallest maximum independent set.
        VertexSet witness;
    };

    auto independence_number(const Graph & g) -> IndependentSetResult;

    /// Lexicographically smallest maximum independent set of g[within].
    auto maximum_independent_set_within(const Graph & g, VertexSet within) -> VertexSet;

    /// Lexicographically smallest independent set of exactly `size` vertices in g[within], if any.
    auto find_independent_set_within(const Graph & g, VertexSet within, int size) -> std::optional<VertexSet>;

    /// Exhaustive subset scan, for order at most 20.
    auto independence_number_brute_force(const Graph & g) -> IndependentSetResult;

    /// delta(g); throws std::invalid_argument on the empty graph.
    auto min_degree(const Graph & g) -> int;
}

#endif
