/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/invariants.hh>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

using std::array;
using std::optional;
using std::vector;

namespace hamtough
{
    namespace
    {
        /**
         * Unit vertex-capacity flow from s to t, on the usual split graph:
         * every vertex v is an arc in(v) -> out(v), every edge uw gives arcs
         * out(u) -> in(w) and out(w) -> in(u). Edge arcs are uncapacitated so
         * the residual cut is made of vertex arcs only. Flow state is kept as
         * bitsets; vertex capacities keep every edge arc at 0 or 1 unit.
         */
        class SplitFlow
        {
        public:
            SplitFlow(const Graph & g, int s, int t) :
                _g(g), _s(s), _t(t), _sent(g.order()), _received(g.order())
            {
            }

            /// Augments until no path remains or limit is reached.
            auto run(int limit) -> int
            {
                while ((limit <= 0 || _value < limit) && augment())
                    ++_value;
                return _value;
            }

            /// Vertices whose in-side but not out-side is reachable in the residual graph.
            auto cut() -> VertexSet
            {
                search();
                return _reached_in - _reached_out;
            }

        private:
            // node encoding: 2v is in(v), 2v+1 is out(v)
            auto search() -> bool
            {
                _reached_in = VertexSet::single(_s);
                _reached_out = VertexSet::single(_s);
                _parent.fill(-1);

                vector<int> queue{2 * _s + 1};
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    int node = queue[head];
                    int v = node / 2;
                    auto visit = [&](int next) {
                        _parent[next] = node;
                        queue.push_back(next);
                    };

                    if (node % 2 == 1) {
                        // out(v): forward to any in(w), backward to in(v)
                        for (int w : _g.rows()[v] - _reached_in) {
                            _reached_in.insert(w);
                            visit(2 * w);
                            if (w == _t)
                                return true;
                        }
                        if (_through.contains(v) && ! _reached_in.contains(v)) {
                            _reached_in.insert(v);
                            visit(2 * v);
                        }
                    }
                    else {
                        // in(v): forward across v if unused, backward along edges carrying flow into v
                        if (! _through.contains(v) && v != _t && ! _reached_out.contains(v)) {
                            _reached_out.insert(v);
                            visit(2 * v + 1);
                        }
                        for (int x : _received[v] - _reached_out) {
                            _reached_out.insert(x);
                            visit(2 * x + 1);
                        }
                    }
                }
                return false;
            }

            auto augment() -> bool
            {
                if (! search())
                    return false;

                int node = 2 * _t;
                while (node != 2 * _s + 1) {
                    int from = _parent[node];
                    int a = from / 2, b = node / 2;
                    if (from % 2 == 1 && node % 2 == 0) {
                        if (a == b)
                            _through.erase(a);
                        else {
                            _sent[a].insert(b);
                            _received[b].insert(a);
                        }
                    }
                    else {
                        // in(a) -> out(b)
                        if (a == b)
                            _through.insert(a);
                        else {
                            _sent[b].erase(a);
                            _received[a].erase(b);
                        }
                    }
                    node = from;
                }
                return true;
            }

            const Graph & _g;
            int _s, _t;
            int _value = 0;
            vector<VertexSet> _sent, _received;
            VertexSet _through, _reached_in, _reached_out;
            array<int, 2 * Graph::max_order> _parent{};
        };

        auto check_pair(const Graph & g, int s, int t) -> void
        {
            if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
                throw std::out_of_range("flow endpoint out of range");
            if (s == t || g.adjacent(s, t))
                throw std::invalid_argument("flow endpoints must be distinct and nonadjacent");
        }

        struct CutSearch
        {
            int value;

            /// -1 when no pair beat the minimum degree, so a smallest neighbourhood is a minimum cut
            int source = -1, sink = -1;
        };

        /// Even's scheme: only sources 0..kappa need checking, against every later nonadjacent vertex.
        auto smallest_cut(const Graph & g) -> CutSearch
        {
            int n = g.order();
            CutSearch best{min_degree(g)};
            for (int i = 0; i < n && i <= best.value; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (g.adjacent(i, j))
                        continue;
                    int paths = SplitFlow(g, i, j).run(best.value);
                    if (paths < best.value) {
                        best.value = paths;
                        best.source = i;
                        best.sink = j;
                    }
                    if (best.value == 0)
                        return best;
                }
            return best;
        }
    }

    auto max_vertex_disjoint_paths(const Graph & g, int s, int t, int limit) -> int
    {
        check_pair(g, s, t);
        return SplitFlow(g, s, t).run(limit);
    }

    auto vertex_connectivity(const Graph & g) -> int
    {
        int n = g.order();
        if (n <= 1)
            return 0;
        if (g.is_complete())
            return n - 1;
        if (! is_connected(g))
            return 0;
        return smallest_cut(g).value;
    }

    auto is_k_connected(const Graph & g, int k) -> bool
    {
        if (k <= 0)
            return true;
        int n = g.order();
        if (g.is_complete())
            return n - 1 >= k;
        if (min_degree(g) < k)
            return false;
        for (int i = 0; i < k && i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (! g.adjacent(i, j) && SplitFlow(g, i, j).run(k) < k)
                    return false;
        return true;
    }

    auto minimum_vertex_cut(const Graph & g) -> optional<VertexSet>
    {
        if (g.is_complete())
            return std::nullopt;
        if (! is_connected(g))
            return VertexSet{};
        auto best = smallest_cut(g);
        if (best.source == -1) {
            for (int v : g.vertices())
                if (g.degree(v) == best.value)
                    return g.neighbours(v);
        }
        SplitFlow flow(g, best.source, best.sink);
        flow.run(0);
        return flow.cut();
    }
}
