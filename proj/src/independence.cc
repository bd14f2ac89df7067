/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/invariants.hh>

#include <stdexcept>

using std::optional;

namespace hamtough
{
    namespace
    {
        /// Number of cliques in a greedy clique cover of g[candidates]; an upper bound on alpha.
        auto clique_cover_bound(const Graph & g, VertexSet candidates) -> int
        {
            auto rows = g.rows();
            int cliques = 0;
            while (! candidates.empty()) {
                int u = candidates.first();
                VertexSet clique = VertexSet::single(u), extend = candidates & rows[u];
                while (! extend.empty()) {
                    int w = extend.first();
                    clique.insert(w);
                    extend &= rows[w];
                }
                candidates -= clique;
                ++cliques;
            }
            return cliques;
        }

        /**
         * Include-first branching on the smallest candidate visits independent
         * sets in lexicographic order of their sorted vertex lists, so the
         * first maximum found is the lexicographically smallest one.
         */
        class IndependentSetSearch
        {
        public:
            IndependentSetSearch(const Graph & g, int target) :
                _g(g), _target(target)
            {
            }

            auto run(VertexSet candidates) -> void { expand(VertexSet{}, candidates); }

            VertexSet best;
            int best_size = -1;

        private:
            auto done() const -> bool { return _target > 0 && best_size >= _target; }

            auto expand(VertexSet current, VertexSet candidates) -> void
            {
                int size = current.size();
                if (candidates.empty() || (_target > 0 && size == _target)) {
                    if (size > best_size) {
                        best = current;
                        best_size = size;
                    }
                    return;
                }

                int need = _target > 0 ? _target - 1 : best_size;
                if (size + candidates.size() <= need || size + clique_cover_bound(_g, candidates) <= need)
                    return;

                int v = candidates.first();
                expand(current.with(v), candidates - _g.rows()[v].with(v));
                if (done())
                    return;
                expand(current, candidates.without(v));
            }

            const Graph & _g;
            int _target;
        };
    }

    auto maximum_independent_set_within(const Graph & g, VertexSet within) -> VertexSet
    {
        IndependentSetSearch search(g, 0);
        search.run(within & g.vertices());
        return search.best;
    }

    auto find_independent_set_within(const Graph & g, VertexSet within, int size) -> optional<VertexSet>
    {
        if (size <= 0)
            return VertexSet{};
        IndependentSetSearch search(g, size);
        search.run(within & g.vertices());
        if (search.best_size == size)
            return search.best;
        return std::nullopt;
    }

    auto independence_number(const Graph & g) -> IndependentSetResult
    {
        auto witness = maximum_independent_set_within(g, g.vertices());
        return IndependentSetResult{witness.size(), witness};
    }

    auto independence_number_brute_force(const Graph & g) -> IndependentSetResult
    {
        int n = g.order();
        if (n > 20)
            throw std::invalid_argument("brute-force independence number is limited to order 20");

        IndependentSetResult result;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            VertexSet s{bits};
            int size = s.size();
            if (size < result.size || ! is_independent(g, s))
                continue;
            if (size > result.size || lexicographically_less(s, result.witness)) {
                result.size = size;
                result.witness = s;
            }
        }
        return result;
    }
}
