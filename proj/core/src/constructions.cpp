#include <irr/constructions.hpp>
#include <irr/error.hpp>

#include <algorithm>

namespace irr
{
    RoleMap::RoleMap(std::vector<std::string> labels) :
        _labels(std::move(labels))
    {
        for (std::size_t i = 0; i < _labels.size(); ++i)
            if (! _index.emplace(_labels[i], static_cast<int>(i)).second)
                throw Error{ErrorCode::InvalidParameter, "duplicate role label '" + _labels[i] + "'"};
    }

    auto RoleMap::find(std::string_view label) const -> std::optional<int>
    {
        auto it = _index.find(std::string{label});
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto RoleMap::vertex(std::string_view label) const -> int
    {
        if (auto v = find(label))
            return *v;
        throw Error{ErrorCode::InvalidParameter, "no vertex labelled '" + std::string{label} + "'"};
    }

    auto RoleMap::set(std::initializer_list<std::string_view> labels) const -> VertexSet
    {
        VertexSet s;
        for (auto l : labels)
            s.insert(vertex(l));
        return s;
    }

    namespace
    {
        struct GnIndex
        {
            int n;
            auto u() const -> int { return 0; }
            auto v() const -> int { return 1; }
            auto a(int i) const -> int { return 1 + i; }
            auto b(int i) const -> int { return 1 + n + i; }
            auto c(int i) const -> int { return 1 + 2 * n + i; }
            auto d(int i) const -> int { return 1 + 3 * n + i; }
        };

        auto check_gn(int n) -> void
        {
            if (n < 1)
                throw Error{ErrorCode::InvalidN, "G_n needs n >= 1, got " + std::to_string(n)};
            if (n > max_gn)
                throw Error{ErrorCode::CapacityExceeded, "G_" + std::to_string(n) + " has " + std::to_string(4 * n + 2)
                    + " vertices, capacity is 64"};
        }
    }

    auto build_gn(int n) -> Construction
    {
        check_gn(n);
        GnIndex ix{n};
        std::vector<Edge> edges{{ix.u(), ix.v()}};
        for (int i = 1; i <= n; ++i) {
            edges.emplace_back(ix.u(), ix.a(i));
            edges.emplace_back(ix.v(), ix.b(i));
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j)
                    edges.emplace_back(ix.a(i), ix.b(j));
        for (int i = 1; i <= n; ++i) {
            edges.emplace_back(ix.a(i), ix.c(i));
            edges.emplace_back(ix.c(i), ix.b(i));
            edges.emplace_back(ix.b(i), ix.d(i));
            edges.emplace_back(ix.d(i), ix.a(i));
        }

        std::vector<std::string> labels(4 * n + 2);
        labels[ix.u()] = "u";
        labels[ix.v()] = "v";
        for (int i = 1; i <= n; ++i) {
            auto k = std::to_string(i);
            labels[ix.a(i)] = "a" + k;
            labels[ix.b(i)] = "b" + k;
            labels[ix.c(i)] = "c" + k;
            labels[ix.d(i)] = "d" + k;
        }
        return {graph_from_edges(4 * n + 2, edges), RoleMap{std::move(labels)}};
    }

    auto named_ir_sets_gn(int n) -> std::vector<std::pair<std::string, VertexSet>>
    {
        check_gn(n);
        GnIndex ix{n};
        VertexSet cd;
        for (int i = 1; i <= n; ++i) {
            cd.insert(ix.c(i));
            cd.insert(ix.d(i));
        }

        std::vector<std::pair<std::string, VertexSet>> result;
        for (auto [hub, side, name] : {std::tuple{ix.u(), 'a', "X"}, std::tuple{ix.v(), 'b', "Y"}}) {
            VertexSet base = cd.with(hub);
            result.emplace_back(name, base);
            for (int i = 1; i <= n; ++i) {
                int end = side == 'a' ? ix.a(i) : ix.b(i);
                auto k = std::to_string(i);
                result.emplace_back(std::string{name} + k, base.without(ix.c(i)).with(end));
                result.emplace_back(std::string{name} + k + "'", base.without(ix.d(i)).with(end));
            }
        }
        return result;
    }

    auto expected_ir_sets_gn(int n) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> sets;
        for (auto & [name, s] : named_ir_sets_gn(n))
            sets.push_back(s);
        std::sort(sets.begin(), sets.end());
        return sets;
    }

    auto build_gprime() -> Construction
    {
        // x1=0, x2=1, x3=2, x1'=3, x2'=4, x3'=5
        auto g = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
        return {std::move(g), RoleMap{{"x1", "x2", "x3", "x1'", "x2'", "x3'"}}};
    }

    auto build_double_star(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw Error{ErrorCode::InvalidParameter, "S(a,b) needs a, b >= 1"};
        if (a + b + 2 > max_order)
            throw Error{ErrorCode::CapacityExceeded, "S(" + std::to_string(a) + "," + std::to_string(b)
                + ") has more than 64 vertices"};
        std::vector<Edge> edges{{0, 1}};
        for (int i = 0; i < a; ++i)
            edges.emplace_back(0, 2 + i);
        for (int i = 0; i < b; ++i)
            edges.emplace_back(1, 2 + a + i);
        return graph_from_edges(a + b + 2, edges);
    }

    auto build_path(int n) -> Graph
    {
        if (n < 1)
            throw Error{ErrorCode::InvalidParameter, "P_n needs n >= 1"};
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return graph_from_edges(n, edges);
    }

    auto build_cycle(int n) -> Graph
    {
        if (n < 3)
            throw Error{ErrorCode::InvalidParameter, "C_n needs n >= 3"};
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return graph_from_edges(n, edges);
    }

    auto build_complete(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return graph_from_edges(n, edges);
    }

    auto build_star(int leaves) -> Graph
    {
        if (leaves < 1)
            throw Error{ErrorCode::InvalidParameter, "K_{1,k} needs k >= 1"};
        std::vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return graph_from_edges(leaves + 1, edges);
    }
}
