#ifndef IRR_GRAPH_HPP
#define IRR_GRAPH_HPP

#include <irr/vertex_set.hpp>

#include <span>
#include <utility>
#include <vector>

namespace irr
{
    using Edge = std::pair<int, int>;

    /**
     * Simple undirected graph on at most 64 vertices. Each vertex owns one
     * bit row of neighbours; rows are symmetric and loop-free. Immutable once
     * built, so values can be shared freely between threads.
     */
    class Graph
    {
    public:
        Graph() = default;
        /// Edgeless graph on n vertices.
        explicit Graph(int n);

        auto order() const -> int { return static_cast<int>(_rows.size()); }
        auto size() const -> int;
        auto vertices() const -> VertexSet { return VertexSet::first(order()); }

        auto neighbours(int v) const -> VertexSet { return _rows[v]; }
        auto closed_neighbours(int v) const -> VertexSet { return _rows[v].with(v); }
        auto degree(int v) const -> int { return _rows[v].size(); }
        auto adjacent(int u, int v) const -> bool { return _rows[u].contains(v); }

        /// Edges (u,v) with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        friend auto graph_from_edges(int, std::span<const Edge>) -> Graph;
        std::vector<VertexSet> _rows;
    };

    /// Throws IndexOutOfRange, SelfLoop or CapacityExceeded. Duplicate edges collapse.
    auto graph_from_edges(int n, std::span<const Edge> edges) -> Graph;
    inline auto graph_from_edges(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return graph_from_edges(n, std::span<const Edge>{edges.begin(), edges.size()});
    }

    /// Throws IndexOutOfRange if `s` has a member outside the graph.
    auto check_in_range(const Graph & g, VertexSet s) -> void;

    /// s together with every neighbour of a member of s.
    auto closed_neighbourhood(const Graph & g, VertexSet s) -> VertexSet;

    struct InducedSubgraph
    {
        Graph graph;
        /// old index -> new index, -1 for vertices outside the set
        std::vector<int> index_map;
    };

    /// G[s], keeping the relative order of the surviving vertices.
    auto induced_subgraph(const Graph & g, VertexSet s) -> InducedSubgraph;

    /// h with h.adjacent(perm[u], perm[v]) == g.adjacent(u, v).
    auto relabel(const Graph & g, std::span<const int> perm) -> Graph;

    auto is_connected(const Graph & g) -> bool;

    /**
     * Unbounded adjacency-list graph, used where vertex counts can pass 64
     * (reconfiguration graphs). Same structural queries as Graph.
     */
    class SparseGraph
    {
    public:
        SparseGraph() = default;
        explicit SparseGraph(int n) : _adj(n) {}
        /// Edges must be loop-free; duplicates are ignored.
        SparseGraph(int n, std::span<const Edge> edges);
        explicit SparseGraph(const Graph & g);

        auto order() const -> int { return static_cast<int>(_adj.size()); }
        auto size() const -> int { return _size; }
        auto neighbours(int v) const -> const std::vector<int> & { return _adj[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_adj[v].size()); }
        auto adjacent(int u, int v) const -> bool;
        auto edges() const -> std::vector<Edge>;

    private:
        std::vector<std::vector<int>> _adj;
        int _size = 0;
    };
}

#endif
