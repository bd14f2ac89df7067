/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/graph.hh>
#include <hamtough/limits.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::out_of_range;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace hamtough
{
    ParseError::ParseError(const string & message, std::size_t offset) :
        std::runtime_error(message + " (at byte " + to_string(offset) + ")"),
        _offset(offset)
    {
    }

    ResourceLimitExceeded::ResourceLimitExceeded(const string & message) :
        std::runtime_error(message)
    {
    }

    auto SearchBudget::exceeded(const char * why) -> void
    {
        throw ResourceLimitExceeded(why);
    }

    namespace
    {
        auto check_order(int n) -> void
        {
            if (n < 0 || n > Graph::max_order)
                throw invalid_argument("graph order " + to_string(n) + " outside supported range 0.." + to_string(Graph::max_order));
        }
    }

    Graph::Graph(int n) :
        _n(n)
    {
        check_order(n);
        _rows.resize(n);
    }

    Graph::Graph(int n, span<const Edge> edges) :
        Graph(n)
    {
        for (auto [u, v] : edges) {
            check_vertex(u);
            check_vertex(v);
            if (u == v)
                throw invalid_argument("self loop on vertex " + to_string(u));
            _rows[u].insert(v);
            _rows[v].insert(u);
        }
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) :
        Graph(n, span<const Edge>(edges.begin(), edges.size()))
    {
    }

    auto Graph::from_rows(vector<VertexSet> rows) -> Graph
    {
        Graph g(static_cast<int>(rows.size()));
        auto all = g.vertices();
        for (int v = 0; v < g._n; ++v) {
            if (! rows[v].subset_of(all))
                throw invalid_argument("row " + to_string(v) + " has bits beyond the vertex range");
            if (rows[v].contains(v))
                throw invalid_argument("row " + to_string(v) + " has a self loop");
            for (int w : rows[v])
                if (! rows[w].contains(v))
                    throw invalid_argument("rows are not symmetric at " + to_string(v) + ", " + to_string(w));
        }
        g._rows = std::move(rows);
        return g;
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw out_of_range("vertex " + to_string(v) + " not in graph of order " + to_string(_n));
    }

    auto Graph::size() const noexcept -> int
    {
        int twice = 0;
        for (auto row : _rows)
            twice += row.size();
        return twice / 2;
    }

    auto Graph::neighbours(int v) const -> VertexSet
    {
        check_vertex(v);
        return _rows[v];
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < _n; ++u)
            for (int v : _rows[u])
                if (u < v)
                    result.push_back({u, v});
        return result;
    }

    auto Graph::is_complete() const noexcept -> bool
    {
        for (int v = 0; v < _n; ++v)
            if (_rows[v].size() != _n - 1)
                return false;
        return true;
    }

    auto Graph::with_edge(int u, int v) const -> Graph
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw invalid_argument("self loop on vertex " + to_string(u));
        Graph result = *this;
        result._rows[u].insert(v);
        result._rows[v].insert(u);
        return result;
    }

    auto Graph::without_edge(int u, int v) const -> Graph
    {
        check_vertex(u);
        check_vertex(v);
        Graph result = *this;
        result._rows[u].erase(v);
        result._rows[v].erase(u);
        return result;
    }

    auto Graph::relabelled(span<const int> permutation) const -> Graph
    {
        if (permutation.size() != static_cast<std::size_t>(_n))
            throw invalid_argument("permutation has wrong length");
        vector<bool> seen(_n, false);
        for (int p : permutation) {
            check_vertex(p);
            if (seen[p])
                throw invalid_argument("not a permutation");
            seen[p] = true;
        }

        Graph result(_n);
        for (int u = 0; u < _n; ++u)
            for (int v : _rows[u])
                result._rows[permutation[u]].insert(permutation[v]);
        return result;
    }

    GraphBuilder::GraphBuilder(int n) :
        _n(n)
    {
        check_order(n);
        _rows.resize(n);
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw out_of_range("edge " + to_string(u) + " " + to_string(v) + " out of range for order " + to_string(_n));
        if (u == v)
            throw invalid_argument("self loop on vertex " + to_string(u));
        _rows[u].insert(v);
        _rows[v].insert(u);
        return *this;
    }

    auto GraphBuilder::build() const -> Graph
    {
        return Graph::from_rows(_rows);
    }

    auto neighbourhood(const Graph & g, int v) -> VertexSet
    {
        return g.neighbours(v);
    }

    auto closed_neighbourhood(const Graph & g, int v) -> VertexSet
    {
        return g.neighbours(v).with(v);
    }

    auto set_neighbourhood(const Graph & g, VertexSet s) -> VertexSet
    {
        if (! s.subset_of(g.vertices()))
            throw out_of_range("vertex set exceeds graph order");
        VertexSet result;
        for (int v : s)
            result |= g.rows()[v];
        return result - s;
    }

    auto induced_subgraph(const Graph & g, VertexSet s) -> InducedSubgraph
    {
        if (! s.subset_of(g.vertices()))
            throw out_of_range("vertex set exceeds graph order");

        InducedSubgraph result{Graph{}, s.to_vector()};
        vector<int> position(g.order(), -1);
        for (std::size_t i = 0; i < result.original.size(); ++i)
            position[result.original[i]] = static_cast<int>(i);

        vector<VertexSet> rows(result.original.size());
        for (std::size_t i = 0; i < result.original.size(); ++i)
            for (int w : g.rows()[result.original[i]] & s)
                rows[i].insert(position[w]);
        result.graph = Graph::from_rows(std::move(rows));
        return result;
    }

    auto component_of(const Graph & g, VertexSet alive, int start) noexcept -> VertexSet
    {
        auto rows = g.rows();
        VertexSet component = VertexSet::single(start), frontier = component;
        while (! frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= rows[v];
            next &= alive;
            next -= component;
            component |= next;
            frontier = next;
        }
        return component;
    }

    auto components_within(const Graph & g, VertexSet alive) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        alive &= g.vertices();
        while (! alive.empty()) {
            auto c = component_of(g, alive, alive.first());
            result.push_back(c);
            alive -= c;
        }
        return result;
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        return components_within(g, g.vertices());
    }

    auto count_components_within(const Graph & g, VertexSet alive) noexcept -> int
    {
        int count = 0;
        while (! alive.empty()) {
            alive -= component_of(g, alive, alive.first());
            ++count;
        }
        return count;
    }

    auto is_connected(const Graph & g) noexcept -> bool
    {
        return count_components_within(g, g.vertices()) <= 1;
    }

    auto is_independent(const Graph & g, VertexSet s) noexcept -> bool
    {
        auto rows = g.rows();
        for (int v : s)
            if (rows[v].intersects(s))
                return false;
        return true;
    }

    auto min_degree_within(const Graph & g, VertexSet alive) noexcept -> int
    {
        int best = -1;
        for (int v : alive) {
            int d = (g.rows()[v] & alive).size();
            if (best == -1 || d < best)
                best = d;
        }
        return best;
    }

    auto edges_between(const Graph & g, VertexSet a, VertexSet b) noexcept -> int
    {
        int count = 0;
        for (int v : a)
            count += (g.rows()[v] & b).size();
        return count;
    }

    auto edges_within(const Graph & g, VertexSet s) noexcept -> int
    {
        int twice = 0;
        for (int v : s)
            twice += (g.rows()[v] & s).size();
        return twice / 2;
    }
}
