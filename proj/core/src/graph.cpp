#include <irr/error.hpp>
#include <irr/graph.hpp>

#include <algorithm>
#include <string>

namespace irr
{
    auto to_string(ErrorCode code) -> std::string_view
    {
        switch (code) {
            case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
            case ErrorCode::SelfLoop: return "SelfLoop";
            case ErrorCode::CapacityExceeded: return "CapacityExceeded";
            case ErrorCode::MalformedGraph6: return "MalformedGraph6";
            case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
            case ErrorCode::NotAMember: return "NotAMember";
            case ErrorCode::NotIrredundant: return "NotIrredundant";
            case ErrorCode::TooManyIRSets: return "TooManyIRSets";
            case ErrorCode::InvalidPartition: return "InvalidPartition";
            case ErrorCode::PreconditionViolated: return "PreconditionViolated";
            case ErrorCode::NotIrredundantResult: return "NotIrredundantResult";
            case ErrorCode::InvalidN: return "InvalidN";
            case ErrorCode::InvalidParameter: return "InvalidParameter";
            case ErrorCode::InternalError: return "InternalError";
        }
        return "UnknownError";
    }

    auto VertexSet::to_string() const -> std::string
    {
        std::string result = "{";
        bool first = true;
        for (int v : *this) {
            if (! first)
                result += ',';
            result += std::to_string(v);
            first = false;
        }
        return result + "}";
    }

    Graph::Graph(int n)
    {
        if (n < 0)
            throw Error{ErrorCode::InvalidParameter, "negative vertex count"};
        if (n > max_order)
            throw Error{ErrorCode::CapacityExceeded, std::to_string(n) + " vertices, capacity is 64"};
        _rows.resize(n);
    }

    auto Graph::size() const -> int
    {
        int twice = 0;
        for (auto row : _rows)
            twice += row.size();
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < order(); ++u)
            for (int v : _rows[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto graph_from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error{ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v)
                    + ") outside 0.." + std::to_string(n - 1)};
            if (u == v)
                throw Error{ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u)};
            g._rows[u].insert(v);
            g._rows[v].insert(u);
        }
        return g;
    }

    auto check_in_range(const Graph & g, VertexSet s) -> void
    {
        if (! s.subset_of(g.vertices()))
            throw Error{ErrorCode::IndexOutOfRange, "set " + s.to_string() + " exceeds order " + std::to_string(g.order())};
    }

    auto closed_neighbourhood(const Graph & g, VertexSet s) -> VertexSet
    {
        check_in_range(g, s);
        VertexSet result = s;
        for (int v : s)
            result |= g.neighbours(v);
        return result;
    }

    auto induced_subgraph(const Graph & g, VertexSet s) -> InducedSubgraph
    {
        check_in_range(g, s);
        std::vector<int> index_map(g.order(), -1);
        int next = 0;
        for (int v : s)
            index_map[v] = next++;

        std::vector<Edge> edges;
        for (int v : s)
            for (int w : g.neighbours(v) & s)
                if (v < w)
                    edges.emplace_back(index_map[v], index_map[w]);
        return {graph_from_edges(next, edges), std::move(index_map)};
    }

    auto relabel(const Graph & g, std::span<const int> perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.order())
            throw Error{ErrorCode::InvalidParameter, "permutation size does not match order"};
        VertexSet image;
        for (int p : perm) {
            if (p < 0 || p >= g.order() || image.contains(p))
                throw Error{ErrorCode::InvalidParameter, "not a permutation of 0.." + std::to_string(g.order() - 1)};
            image.insert(p);
        }
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        return graph_from_edges(g.order(), edges);
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() <= 1)
            return true;
        VertexSet seen = VertexSet::singleton(0), frontier = seen;
        while (! frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbours(v);
            frontier = next - seen;
            seen |= next;
        }
        return seen == g.vertices();
    }

    SparseGraph::SparseGraph(int n, std::span<const Edge> edges) :
        _adj(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error{ErrorCode::IndexOutOfRange, "edge endpoint outside graph"};
            if (u == v)
                throw Error{ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u)};
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (auto & row : _adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            _size += static_cast<int>(row.size());
        }
        _size /= 2;
    }

    SparseGraph::SparseGraph(const Graph & g) :
        _adj(g.order())
    {
        for (int v = 0; v < g.order(); ++v)
            _adj[v] = g.neighbours(v).members();
        _size = g.size();
    }

    auto SparseGraph::adjacent(int u, int v) const -> bool
    {
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto SparseGraph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < order(); ++u)
            for (int v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }
}
