#include <irr/error.hpp>
#include <irr/structure.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace irr
{
    namespace
    {
        template <class G>
        auto bfs(const G & g, int source) -> std::vector<int>
        {
            std::vector<int> dist(g.order(), -1);
            std::vector<int> queue{source};
            dist[source] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for (int w : g.neighbours(v))
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
            }
            return dist;
        }

        template <class G>
        auto connected(const G & g) -> bool
        {
            if (g.order() <= 1)
                return true;
            auto dist = bfs(g, 0);
            return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
        }

        template <class G>
        auto diameter_impl(const G & g) -> std::optional<int>
        {
            int best = 0;
            for (int s = 0; s < g.order(); ++s) {
                auto dist = bfs(g, s);
                for (int d : dist) {
                    if (d < 0)
                        return std::nullopt;
                    best = std::max(best, d);
                }
            }
            return best;
        }

        // Eccentricity sweep from any vertex then from the farthest one; exact on trees.
        template <class G>
        auto tree_diameter(const G & g) -> int
        {
            auto first = bfs(g, 0);
            int far = static_cast<int>(std::max_element(first.begin(), first.end()) - first.begin());
            auto second = bfs(g, far);
            return *std::max_element(second.begin(), second.end());
        }

        template <class G>
        auto find_induced_c4_impl(const G & g) -> std::optional<std::array<int, 4>>
        {
            for (int a = 0; a < g.order(); ++a)
                for (int b : g.neighbours(a)) {
                    if (b < a)
                        continue;
                    for (int c : g.neighbours(b)) {
                        if (c <= a || g.adjacent(a, c))
                            continue;
                        for (int d : g.neighbours(a))
                            if (d > b && d != c && g.adjacent(c, d) && ! g.adjacent(b, d))
                                return std::array{a, b, c, d};
                    }
                }
            return std::nullopt;
        }

        template <class G>
        auto classify_impl(const G & g) -> ShapeClass
        {
            const int n = g.order();
            const long m = g.size();
            if (m == static_cast<long>(n) * (n - 1) / 2)
                return shape::Complete{n};

            bool is_connected = connected(g);
            int max_degree = 0, min_degree = n;
            for (int v = 0; v < n; ++v) {
                max_degree = std::max(max_degree, g.degree(v));
                min_degree = std::min(min_degree, g.degree(v));
            }

            if (is_connected && n >= 3 && max_degree == 2 && min_degree == 2)
                return shape::Cycle{n};

            if (is_connected && m == n - 1) {
                if (max_degree == n - 1)
                    return shape::Star{n - 1};
                int diam = tree_diameter(g);
                if (diam == 3) {
                    std::vector<int> centre_leaves;
                    for (int v = 0; v < n; ++v)
                        if (g.degree(v) > 1)
                            centre_leaves.push_back(g.degree(v) - 1);
                    std::sort(centre_leaves.begin(), centre_leaves.end());
                    return shape::DoubleStar{centre_leaves.at(0), centre_leaves.at(1)};
                }
                if (max_degree <= 2)
                    return shape::Path{n};
                return shape::Tree{n, diam};
            }

            return shape::Other{is_connected, n, static_cast<int>(m)};
        }

        template <class G>
        class IsomorphismSearch
        {
        public:
            IsomorphismSearch(const G & g, const G & h) : _g(g), _h(h) {}

            auto run() -> bool
            {
                const int n = _g.order();
                if (n != _h.order() || _g.size() != _h.size())
                    return false;

                if (! colour_vertices())
                    return false;
                order_vertices();
                _map.assign(n, -1);
                _used.assign(n, false);
                return extend(0);
            }

        private:
            auto invariant(const G & x, int v) const -> std::vector<int>
            {
                std::vector<int> inv{x.degree(v)};
                for (int w : x.neighbours(v))
                    inv.push_back(x.degree(w));
                std::sort(inv.begin() + 1, inv.end());
                return inv;
            }

            auto colour_vertices() -> bool
            {
                const int n = _g.order();
                std::map<std::vector<int>, int> ids;
                std::vector<std::vector<int>> gi(n), hi(n);
                for (int v = 0; v < n; ++v) {
                    gi[v] = invariant(_g, v);
                    hi[v] = invariant(_h, v);
                    ids.emplace(gi[v], 0);
                    ids.emplace(hi[v], 0);
                }
                int next = 0;
                for (auto & [inv, id] : ids)
                    id = next++;

                _gcol.resize(n);
                _hcol.resize(n);
                std::vector<int> gcount(next), hcount(next);
                for (int v = 0; v < n; ++v) {
                    _gcol[v] = ids[gi[v]];
                    _hcol[v] = ids[hi[v]];
                    ++gcount[_gcol[v]];
                    ++hcount[_hcol[v]];
                }
                _class_size = gcount;
                return gcount == hcount;
            }

            // Rarest colour first, then greedily the vertex with most already-placed neighbours.
            auto order_vertices() -> void
            {
                const int n = _g.order();
                std::vector<bool> placed(n, false);
                std::vector<int> links(n, 0);
                for (int step = 0; step < n; ++step) {
                    int best = -1;
                    for (int v = 0; v < n; ++v) {
                        if (placed[v])
                            continue;
                        if (best < 0 || links[v] > links[best]
                                || (links[v] == links[best] && _class_size[_gcol[v]] < _class_size[_gcol[best]]))
                            best = v;
                    }
                    placed[best] = true;
                    _order.push_back(best);
                    for (int w : _g.neighbours(best))
                        ++links[w];
                }
            }

            auto extend(std::size_t depth) -> bool
            {
                if (depth == _order.size())
                    return true;
                int v = _order[depth];
                for (int w = 0; w < _h.order(); ++w) {
                    if (_used[w] || _hcol[w] != _gcol[v])
                        continue;
                    bool consistent = true;
                    for (std::size_t i = 0; i < depth && consistent; ++i) {
                        int u = _order[i];
                        consistent = _g.adjacent(u, v) == _h.adjacent(_map[u], w);
                    }
                    if (! consistent)
                        continue;
                    _map[v] = w;
                    _used[w] = true;
                    if (extend(depth + 1))
                        return true;
                    _used[w] = false;
                    _map[v] = -1;
                }
                return false;
            }

            const G & _g;
            const G & _h;
            std::vector<int> _gcol, _hcol, _class_size, _order, _map;
            std::vector<bool> _used;
        };

        auto quoted(const std::string & s) -> std::string
        {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            return out + "\"";
        }

        template <class G>
        auto export_dot_impl(const G & g, const std::vector<std::string> & labels) -> std::string
        {
            if (! labels.empty() && static_cast<int>(labels.size()) != g.order())
                throw Error{ErrorCode::InvalidParameter, "need one label per vertex"};
            auto name = [&](int v) { return quoted(labels.empty() ? std::to_string(v) : labels.at(v)); };
            std::ostringstream out;
            out << "graph G {\n";
            for (int v = 0; v < g.order(); ++v)
                out << "  " << name(v) << ";\n";
            for (auto [u, v] : g.edges())
                out << "  " << name(u) << " -- " << name(v) << ";\n";
            out << "}\n";
            return out.str();
        }
    }

    auto diameter(const Graph & g) -> std::optional<int> { return diameter_impl(g); }
    auto diameter(const SparseGraph & g) -> std::optional<int> { return diameter_impl(g); }

    auto distances_from(const SparseGraph & g, int source) -> std::vector<int> { return bfs(g, source); }

    auto find_induced_c4(const Graph & g) -> std::optional<std::array<int, 4>> { return find_induced_c4_impl(g); }
    auto find_induced_c4(const SparseGraph & g) -> std::optional<std::array<int, 4>> { return find_induced_c4_impl(g); }

    auto classify_shape(const Graph & g) -> ShapeClass { return classify_impl(g); }
    auto classify_shape(const SparseGraph & g) -> ShapeClass { return classify_impl(g); }

    auto to_string(const ShapeClass & s) -> std::string
    {
        return std::visit([](const auto & v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            auto str = [](auto x) { return std::to_string(x); };
            if constexpr (std::is_same_v<T, shape::Complete>)
                return "Complete(" + str(v.order) + ")";
            else if constexpr (std::is_same_v<T, shape::Cycle>)
                return "Cycle(" + str(v.order) + ")";
            else if constexpr (std::is_same_v<T, shape::Star>)
                return "Star(" + str(v.leaves) + ")";
            else if constexpr (std::is_same_v<T, shape::DoubleStar>)
                return "DoubleStar(" + str(v.a) + "," + str(v.b) + ")";
            else if constexpr (std::is_same_v<T, shape::Path>)
                return "Path(" + str(v.order) + ")";
            else if constexpr (std::is_same_v<T, shape::Tree>)
                return "Tree(order=" + str(v.order) + ",diameter=" + str(v.diameter) + ")";
            else
                return std::string{"Other("} + (v.connected ? "connected" : "disconnected") + ",order=" + str(v.order)
                    + ",size=" + str(v.size) + ")";
        }, s);
    }

    auto shape_tag(const ShapeClass & s) -> std::string
    {
        static const char * const tags[] = {"complete", "cycle", "star", "double-star", "path", "tree", "other"};
        return tags[s.index()];
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool { return IsomorphismSearch<Graph>{g, h}.run(); }
    auto are_isomorphic(const SparseGraph & g, const SparseGraph & h) -> bool
    {
        return IsomorphismSearch<SparseGraph>{g, h}.run();
    }

    auto export_dot(const Graph & g, const std::vector<std::string> & labels) -> std::string
    {
        return export_dot_impl(g, labels);
    }

    auto export_dot(const SparseGraph & g, const std::vector<std::string> & labels) -> std::string
    {
        return export_dot_impl(g, labels);
    }
}
