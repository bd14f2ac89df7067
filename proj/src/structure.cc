/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/invariants.hh>
#include <hamtough/structure.hh>

#include <array>
#include <stdexcept>

using std::array;
using std::function;
using std::optional;
using std::vector;

namespace hamtough
{
    namespace
    {
        // breadth-first order of the Petersen labelling, so each new vertex has an already mapped neighbour
        constexpr array<int, 10> petersen_search_order{0, 1, 4, 5, 2, 6, 3, 9, 7, 8};
    }

    auto is_p2_kp1_free(const Graph & g, int k) -> FreenessResult
    {
        if (k < 1)
            throw std::invalid_argument("P2 + kP1 freeness needs k >= 1");

        FreenessResult result;
        for (auto [x, y] : g.edges()) {
            auto undominated = g.vertices() - closed_neighbourhood(g, x) - closed_neighbourhood(g, y);
            if (undominated.size() < k)
                continue;
            if (auto isolated = find_independent_set_within(g, undominated, k)) {
                result.free = false;
                result.witness = FreenessWitness{Edge{x, y}, *isolated};
                return result;
            }
        }
        return result;
    }

    auto induces_p2_kp1(const Graph & g, Edge edge, VertexSet isolated) -> bool
    {
        auto [x, y] = edge;
        if (x == y || ! g.adjacent(x, y))
            return false;
        if (! isolated.subset_of(g.vertices()))
            return false;
        auto dominated = closed_neighbourhood(g, x) | closed_neighbourhood(g, y);
        return ! isolated.intersects(dominated) && is_independent(g, isolated);
    }

    auto for_each_independent_set(const Graph & g, const function<bool(VertexSet)> & f) -> void
    {
        auto rows = g.rows();
        // returns false once f asks to stop
        auto recurse = [&](auto & self, VertexSet current, VertexSet candidates) -> bool {
            if (! f(current))
                return false;
            for (int v : candidates) {
                auto later = VertexSet{candidates.bits() & ~((std::uint64_t{2} << v) - 1)};
                if (! self(self, current.with(v), later - rows[v]))
                    return false;
            }
            return true;
        };
        recurse(recurse, VertexSet{}, g.vertices());
    }

    auto for_each_maximal_independent_set(const Graph & g, const function<bool(VertexSet)> & f) -> void
    {
        auto all = g.vertices();
        auto rows = g.rows();
        auto non_neighbours = [&](int v) { return all - rows[v].with(v); };

        auto recurse = [&](auto & self, VertexSet chosen, VertexSet candidates, VertexSet excluded) -> bool {
            if (candidates.empty() && excluded.empty())
                return f(chosen);

            int pivot = -1, pivot_score = -1;
            for (int u : candidates | excluded) {
                int score = (candidates & non_neighbours(u)).size();
                if (score > pivot_score) {
                    pivot = u;
                    pivot_score = score;
                }
            }

            for (int v : candidates - non_neighbours(pivot)) {
                auto compatible = non_neighbours(v);
                if (! self(self, chosen.with(v), candidates & compatible, excluded & compatible))
                    return false;
                candidates.erase(v);
                excluded.insert(v);
            }
            return true;
        };
        recurse(recurse, VertexSet{}, all, VertexSet{});
    }

    auto check_independent_neighbour_bound(const Graph & g, int k, const NeighbourBoundOptions & options)
        -> vector<NeighbourBoundViolation>
    {
        vector<NeighbourBoundViolation> violations;
        auto rows = g.rows();
        auto check = [&](VertexSet x) -> bool {
            int required = x.size() - k + 1;
            if (required <= 1)
                return true;
            for (int v : g.vertices() - x) {
                int seen = (rows[v] & x).size();
                if (seen > 0 && seen < required) {
                    violations.push_back({v, x, seen, required});
                    if (options.max_violations != 0 && violations.size() >= options.max_violations)
                        return false;
                }
            }
            return true;
        };

        if (g.order() <= options.all_sets_max_order)
            for_each_independent_set(g, check);
        else
            for_each_maximal_independent_set(g, check);
        return violations;
    }

    auto girth(const Graph & g) -> optional<int>
    {
        int n = g.order();
        optional<int> best;
        for (int root = 0; root < n; ++root) {
            vector<int> distance(n, -1), parent(n, -1), queue{root};
            distance[root] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                if (best && 2 * distance[u] >= *best)
                    break;
                for (int w : g.rows()[u]) {
                    if (distance[w] == -1) {
                        distance[w] = distance[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    else if (w != parent[u]) {
                        int length = distance[u] + distance[w] + 1;
                        if (! best || length < *best)
                            best = length;
                    }
                }
            }
        }
        return best;
    }

    auto petersen_graph() -> Graph
    {
        GraphBuilder builder(10);
        for (int i = 0; i < 5; ++i) {
            builder.add_edge(i, (i + 1) % 5);
            builder.add_edge(i, i + 5);
            builder.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        return builder.build();
    }

    auto petersen_isomorphism(const Graph & g) -> optional<vector<int>>
    {
        if (g.order() != 10 || g.size() != 15)
            return std::nullopt;
        for (int v = 0; v < 10; ++v)
            if (g.degree(v) != 3)
                return std::nullopt;
        if (girth(g) != 5)
            return std::nullopt;

        static const Graph pattern = petersen_graph();

        vector<int> mapping(10, -1);
        VertexSet used;
        auto extend = [&](auto & self, int depth) -> bool {
            if (depth == 10)
                return true;
            int p = petersen_search_order[depth];
            for (int target : g.vertices() - used) {
                bool consistent = true;
                for (int i = 0; i < depth && consistent; ++i) {
                    int q = petersen_search_order[i];
                    consistent = pattern.adjacent(p, q) == g.adjacent(target, mapping[q]);
                }
                if (! consistent)
                    continue;
                mapping[p] = target;
                used.insert(target);
                if (self(self, depth + 1))
                    return true;
                used.erase(target);
                mapping[p] = -1;
            }
            return false;
        };

        if (extend(extend, 0))
            return mapping;
        return std::nullopt;
    }

    auto is_petersen(const Graph & g) -> bool
    {
        return petersen_isomorphism(g).has_value();
    }
}
