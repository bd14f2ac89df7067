/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_GRAPH_HH
#define HAMTOUGH_GUARD_GRAPH_HH 1

#include <hamtough/vertex_set.hh>

#include <compare>
#include <span>
#include <vector>

namespace hamtough
{
    struct Edge
    {
        int u;
        int v;

        auto operator<=>(const Edge &) const = default;
    };

    /**
     * An immutable simple undirected graph on vertices 0..n-1, n <= 64, held
     * as one adjacency bitset row per vertex. Rows are symmetric, irreflexive
     * and never carry bits at or beyond n. Editing returns a new graph.
     */
    class Graph
    {
    public:
        static constexpr int max_order = 64;

        /// The graph with no vertices.
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n);

        Graph(int n, std::span<const Edge> edges);
        Graph(int n, std::initializer_list<Edge> edges);

        /// Validates symmetry, irreflexivity and range before accepting rows.
        static auto from_rows(std::vector<VertexSet> rows) -> Graph;

        auto order() const noexcept -> int { return _n; }
        auto size() const noexcept -> int;

        auto vertices() const noexcept -> VertexSet { return VertexSet::range(_n); }
        auto neighbours(int v) const -> VertexSet;
        auto degree(int v) const -> int { return neighbours(v).size(); }
        auto adjacent(int u, int v) const -> bool { return neighbours(u).contains(v); }

        /// Edges as (u, v) with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto rows() const noexcept -> std::span<const VertexSet> { return _rows; }

        auto is_complete() const noexcept -> bool;

        auto with_edge(int u, int v) const -> Graph;
        auto without_edge(int u, int v) const -> Graph;

        /// Vertex v of this graph becomes permutation[v] of the result.
        auto relabelled(std::span<const int> permutation) const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        auto check_vertex(int v) const -> void;

        int _n = 0;
        std::vector<VertexSet> _rows;
    };

    /// Builds up a graph edge by edge, then freezes it.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int n);

        auto add_edge(int u, int v) -> GraphBuilder &;
        auto build() const -> Graph;

    private:
        int _n;
        std::vector<VertexSet> _rows;
    };

    struct InducedSubgraph
    {
        Graph graph;

        /// original[i] is the vertex of the host graph that became vertex i.
        std::vector<int> original;
    };

    auto neighbourhood(const Graph & g, int v) -> VertexSet;
    auto closed_neighbourhood(const Graph & g, int v) -> VertexSet;

    /// Union of the neighbourhoods of members of s, with s itself removed.
    auto set_neighbourhood(const Graph & g, VertexSet s) -> VertexSet;

    /// Vertices of s in increasing order are relabelled 0..|s|-1.
    auto induced_subgraph(const Graph & g, VertexSet s) -> InducedSubgraph;

    /// Connected components of g, each as a vertex set, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    /// Components of g[alive], ordered by smallest member.
    auto components_within(const Graph & g, VertexSet alive) -> std::vector<VertexSet>;

    /// omega(g[alive]), without materialising the components.
    auto count_components_within(const Graph & g, VertexSet alive) noexcept -> int;

    /// The component of g[alive] containing start (start must be in alive).
    auto component_of(const Graph & g, VertexSet alive, int start) noexcept -> VertexSet;

    auto is_connected(const Graph & g) noexcept -> bool;
    auto is_independent(const Graph & g, VertexSet s) noexcept -> bool;
    auto min_degree_within(const Graph & g, VertexSet alive) noexcept -> int;

    /// e_G(a, b) for disjoint a and b.
    auto edges_between(const Graph & g, VertexSet a, VertexSet b) noexcept -> int;
    auto edges_within(const Graph & g, VertexSet s) noexcept -> int;
}

#endif
