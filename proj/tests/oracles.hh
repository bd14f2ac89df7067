/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_TESTS_ORACLES_HH
#define HAMTOUGH_GUARD_TESTS_ORACLES_HH 1

#include <hamtough/graph.hh>
#include <hamtough/rational.hh>

#include <cstdint>
#include <optional>
#include <vector>

/**
 * Deliberately naive reference implementations. They only use adjacency
 * queries, never the library's algorithms, so agreement is evidence.
 */
namespace oracles
{
    using hamtough::Graph;
    using hamtough::Rational;

    /// Number of components of g restricted to the vertices in alive (bit v set).
    auto components(const Graph & g, std::uint64_t alive) -> int;

    /// nullopt for complete graphs; otherwise min |S| / omega(G - S) over all 2^n sets S with omega >= 2.
    auto toughness(const Graph & g) -> std::optional<Rational>;

    /// Smallest |S| leaving G - S disconnected; n - 1 for complete graphs.
    auto connectivity(const Graph & g) -> int;

    auto independence_number(const Graph & g) -> int;

    /// Scans all (k + 2)-subsets for one inducing exactly one edge.
    auto is_p2_kp1_free(const Graph & g, int k) -> bool;

    /// Entry k - 1 says whether g is (P2 + kP1)-free, for k = 1..max_k, from one tabulation of e(G[S]) over all S.
    auto p2_kp1_free_by_subsets(const Graph & g, int max_k) -> std::vector<bool>;

    /// Tries every vertex order starting at 0.
    auto is_hamiltonian(const Graph & g) -> bool;

    /// Every simple cycle, as a canonical sequence (min first, second < last).
    auto all_cycles(const Graph & g) -> std::vector<std::vector<int>>;

    auto circumference(const Graph & g) -> int;

    /// Neighbour-count bound violations over every independent set, counted.
    auto neighbour_bound_violations(const Graph & g, int k) -> int;

    /// Deterministic random graphs for property tests.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;
}

#endif
