/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_GENERATORS_HH
#define HAMTOUGH_GUARD_GENERATORS_HH 1

#include <hamtough/graph.hh>
#include <hamtough/rational.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hamtough
{
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;

    /// The cycle 0 - 1 - ... - (n-1) - 0; n >= 3.
    auto cycle_graph(int n) -> Graph;

    /// The path 0 - 1 - ... - (n-1).
    auto path_graph(int n) -> Graph;

    /// Centre 0 joined to leaves 1..n-1.
    auto star_graph(int n) -> Graph;

    /// Parts are consecutive vertex blocks of the given sizes.
    auto complete_multipartite(const std::vector<int> & part_sizes) -> Graph;

    /**
     * G(n, p) with exact rational p. Pairs (i, j), i < j, are visited in
     * lexicographic order; each takes one 64-bit word from std::mt19937_64
     * seeded with seed, rejection-sampled to be uniform modulo den(p), and
     * the edge is present when the residue is below num(p). The output
     * depends only on (n, p, seed). Throws std::invalid_argument unless
     * 0 <= p <= 1.
     */
    auto random_graph(int n, const Rational & p, std::uint64_t seed) -> Graph;

    /// Cheap filters applied to labeled graphs before a caller sees them.
    struct LabeledGraphFilter
    {
        int min_degree = 0;
        bool connected = false;

        auto accepts(const Graph & g) const -> bool;
    };

    /**
     * Every labeled simple graph on n vertices, once each. Graph number i
     * has the pair (a, b) as an edge iff bit b(a, b) of i is set, where pairs
     * a < b are numbered in lexicographic order.
     */
    class LabeledGraphs
    {
    public:
        /// Throws std::invalid_argument unless 0 <= n <= max_order.
        explicit LabeledGraphs(int n, int max_order = 7);

        auto order() const noexcept -> int { return _n; }
        auto count() const noexcept -> std::uint64_t { return std::uint64_t{1} << _pairs.size(); }
        auto at(std::uint64_t index) const -> Graph;

        /// Sequential stream; f returns false to stop.
        auto for_each(const LabeledGraphFilter & filter, const std::function<bool(const Graph &)> & f) const -> void;

        /**
         * Splits the index range over workers threads (0 means hardware
         * concurrency). f must be safe to call concurrently; order of calls
         * is unspecified.
         */
        auto parallel_for_each(const LabeledGraphFilter & filter, unsigned workers,
            const std::function<void(const Graph &, std::uint64_t)> & f) const -> void;

    private:
        int _n;
        std::vector<Edge> _pairs;
    };

    /// Runs f(i) for i in [0, count) on workers threads, in dynamically claimed chunks.
    auto parallel_for(std::uint64_t count, unsigned workers, const std::function<void(std::uint64_t)> & f) -> void;
}

#endif
