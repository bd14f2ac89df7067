/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/invariants.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::min;
using std::optional;
using std::to_string;

namespace hamtough
{
    namespace
    {
        /// Calls f(S) for every size-s subset of {0..n-1}, in increasing numeric order.
        template <typename F_>
        auto for_each_subset_of_size(int n, int s, F_ && f) -> bool
        {
            if (s == 0)
                return f(VertexSet{});
            if (s > n)
                return true;
            std::uint64_t x = s >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
            while (true) {
                if (! f(VertexSet{x}))
                    return false;
                // Gosper's hack
                std::uint64_t c = x & (~x + 1);
                std::uint64_t r = x + c;
                if (r == 0)
                    return true;
                x = (((r ^ x) >> 2) / c) | r;
                if (n < 64 && (x >> n) != 0)
                    return true;
            }
        }

        auto check_size_guard(const Graph & g, const ToughnessOptions & options) -> bool
        {
            if (g.order() <= options.max_exhaustive_order)
                return false;
            if (! options.allow_bounded_search)
                throw ResourceLimitExceeded("toughness: order " + to_string(g.order()) + " exceeds exhaustive limit " +
                    to_string(options.max_exhaustive_order));
            return true;
        }

        /// s * t.den < t.num * components, i.e. |S| < t * omega, exactly.
        auto violates(int s, const Rational & t, int components) -> bool
        {
            return __int128{s} * t.den() < __int128{t.num()} * components;
        }
    }

    auto toughness(const Graph & g, const ToughnessOptions & options) -> ToughnessResult
    {
        ToughnessResult result;
        if (g.is_complete()) {
            result.infinite = true;
            return result;
        }

        int n = g.order();
        auto all = g.vertices();
        int whole = count_components_within(g, all);
        if (whole >= 2) {
            result.value = Rational{0};
            result.witness = VertexSet{};
            result.witness_components = whole;
            return result;
        }

        bool bounded = check_size_guard(g, options);
        SearchBudget budget(options.limits);

        optional<Rational> best;
        VertexSet best_cut;
        int best_components = 0;
        int component_cap = n;

        if (bounded) {
            auto cut = *minimum_vertex_cut(g);
            best_components = count_components_within(g, all - cut);
            best = Rational{cut.size(), best_components};
            best_cut = cut;
            component_cap = independence_number(g).size;
        }

        for (int s = 1; s <= n - 2; ++s) {
            // no cut of size s (or larger) can beat the incumbent
            int most_components = min(n - s, component_cap);
            if (best && Rational{s, most_components} >= *best)
                break;

            for_each_subset_of_size(n, s, [&](VertexSet cut) {
                budget.tick();
                int omega = count_components_within(g, all - cut);
                if (omega >= 2 && (! best || violates(s, *best, omega))) {
                    best = Rational{s, omega};
                    best_cut = cut;
                    best_components = omega;
                }
                return true;
            });
        }

        // a connected non-complete graph always has a two-component cut
        result.value = *best;
        result.witness = best_cut;
        result.witness_components = best_components;
        return result;
    }

    auto is_t_tough(const Graph & g, const Rational & t, const ToughnessOptions & options) -> TToughResult
    {
        if (t < Rational{0})
            throw std::invalid_argument("toughness threshold must be nonnegative");

        TToughResult result;
        if (g.is_complete() || t == Rational{0})
            return result;

        int n = g.order();
        auto all = g.vertices();
        int whole = count_components_within(g, all);
        if (whole >= 2) {
            result.tough = false;
            result.violating_cut = VertexSet{};
            result.components = whole;
            return result;
        }

        bool bounded = check_size_guard(g, options);
        SearchBudget budget(options.limits);
        int component_cap = bounded ? independence_number(g).size : n;

        for (int s = 1; s <= n - 2; ++s) {
            if (! violates(s, t, min(n - s, component_cap)))
                break;

            for_each_subset_of_size(n, s, [&](VertexSet cut) {
                budget.tick();
                int omega = count_components_within(g, all - cut);
                if (omega >= 2 && violates(s, t, omega)) {
                    result.tough = false;
                    result.violating_cut = cut;
                    result.components = omega;
                    return false;
                }
                return true;
            });
            if (! result.tough)
                break;
        }

        return result;
    }

    auto min_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            throw std::invalid_argument("minimum degree of the empty graph is undefined");
        return min_degree_within(g, g.vertices());
    }
}
