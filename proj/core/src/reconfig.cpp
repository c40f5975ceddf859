#include <irr/error.hpp>
#include <irr/reconfig.hpp>

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace irr
{
    auto swap_adjacent(const Graph & g, VertexSet d, VertexSet e) -> std::optional<Swap>
    {
        check_in_range(g, d);
        check_in_range(g, e);
        VertexSet out = d - e, in = e - d;
        if (out.size() != 1 || in.size() != 1)
            return std::nullopt;
        if (! g.adjacent(out.front(), in.front()))
            return std::nullopt;
        return Swap{out.front(), in.front()};
    }

    namespace
    {
        auto structure_of(int order, const std::vector<IREdge> & edges) -> SparseGraph
        {
            std::vector<Edge> pairs;
            pairs.reserve(edges.size());
            for (auto & e : edges)
                pairs.emplace_back(e.a, e.b);
            return SparseGraph{order, pairs};
        }

        using Index = std::unordered_map<VertexSet, int, VertexSetHash>;

        auto index_of(const std::vector<VertexSet> & nodes) -> Index
        {
            Index index;
            index.reserve(nodes.size());
            for (std::size_t i = 0; i < nodes.size(); ++i)
                index.emplace(nodes[i], static_cast<int>(i));
            return index;
        }
    }

    IRGraph::IRGraph(Graph base, std::vector<VertexSet> nodes, std::vector<IREdge> edges) :
        _base(std::move(base)),
        _nodes(std::move(nodes)),
        _edges(std::move(edges)),
        _structure(structure_of(static_cast<int>(_nodes.size()), _edges))
    {
        if (! std::is_sorted(_nodes.begin(), _nodes.end()))
            throw Error{ErrorCode::InvalidParameter, "IR-graph nodes must be sorted"};
    }

    auto IRGraph::find(VertexSet s) const -> std::optional<int>
    {
        auto it = std::lower_bound(_nodes.begin(), _nodes.end(), s);
        if (it == _nodes.end() || *it != s)
            return std::nullopt;
        return static_cast<int>(it - _nodes.begin());
    }

    auto IRGraph::shape() const -> ShapeClass
    {
        return classify_shape(_structure);
    }

    auto build_ir_graph(const Graph & g, const BuildOptions & options) -> IRGraph
    {
        auto nodes = all_ir_sets(g, options.search);
        if (nodes.size() > options.max_nodes)
            throw Error{ErrorCode::TooManyIRSets, std::to_string(nodes.size()) + " IR-sets exceed the cap of "
                + std::to_string(options.max_nodes)};

        auto index = index_of(nodes);
        const int count = static_cast<int>(nodes.size());

        // Each edge is found from its lower-index end: swap u out of D for a
        // neighbour v outside D and look the result up.
        auto edges_from = [&](int i, std::vector<IREdge> & out) {
            VertexSet d = nodes[i];
            for (int u : d)
                for (int v : g.neighbours(u) - d) {
                    auto it = index.find(d.without(u).with(v));
                    if (it != index.end() && it->second > i)
                        out.push_back({i, it->second, {u, v}});
                }
        };

        std::vector<IREdge> edges;
        int workers = std::max(1, options.search.workers);
        if (workers == 1 || count < 64) {
            for (int i = 0; i < count; ++i)
                edges_from(i, edges);
        }
        else {
            std::atomic<int> next{0};
            std::mutex lock;
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    std::vector<IREdge> local;
                    for (int i = next++; i < count; i = next++)
                        edges_from(i, local);
                    std::lock_guard guard{lock};
                    edges.insert(edges.end(), local.begin(), local.end());
                });
            for (auto & t : pool)
                t.join();
        }
        std::sort(edges.begin(), edges.end(), [](const IREdge & x, const IREdge & y) {
            return std::pair{x.a, x.b} < std::pair{y.a, y.b};
        });

        return IRGraph{g, std::move(nodes), std::move(edges)};
    }

    auto to_json(const IRGraph & h) -> std::string
    {
        nlohmann::ordered_json out;
        out["order"] = h.base().order();
        out["ir"] = h.nodes().empty() ? 0 : h.nodes().front().size();
        auto nodes = nlohmann::ordered_json::array();
        for (auto s : h.nodes())
            nodes.push_back(s.members());
        out["nodes"] = std::move(nodes);
        auto edges = nlohmann::ordered_json::array();
        for (auto & e : h.edges())
            edges.push_back({{"a", e.a}, {"b", e.b}, {"swap", {e.swap.out, e.swap.in}}});
        out["edges"] = std::move(edges);
        out["shape"] = to_string(h.shape());
        return out.dump(2) + "\n";
    }

    auto flip_set(const Graph & g, VertexSet x, const EpnIsoPartition & partition) -> VertexSet
    {
        if (auto problem = partition_problem(g, x, partition); ! problem.empty())
            throw Error{ErrorCode::InvalidPartition, problem};

        VertexSet result = x - partition.x_epn;
        for (auto [v, choice] : partition.epn_choice)
            result.insert(choice);

        if (result.size() != x.size() || ! is_irredundant(g, result))
            throw Error{ErrorCode::InternalError, "flip-set " + result.to_string() + " of irredundant "
                + x.to_string() + " is not irredundant"};
        return result;
    }

    auto visit_flip_partitions(const Graph & g, VertexSet x, std::size_t cap,
        const std::function<bool (const EpnIsoPartition &)> & visit) -> bool
    {
        if (! is_irredundant(g, x))
            throw Error{ErrorCode::NotIrredundant, x.to_string() + " is not irredundant"};

        // Per member: -1 means it stays in x_iso, otherwise the chosen neighbour.
        std::vector<int> members = x.members();
        std::vector<std::vector<int>> options;
        for (int v : members) {
            std::vector<int> opts;
            if (! g.neighbours(v).intersects(x))
                opts.push_back(-1);
            for (int w : external_private_neighbourhood(g, x, v))
                opts.push_back(w);
            options.push_back(std::move(opts));
        }

        std::vector<std::size_t> pick(members.size(), 0);
        std::size_t visited = 0;
        while (true) {
            if (visited == cap)
                return false;
            EpnIsoPartition p;
            for (std::size_t i = 0; i < members.size(); ++i) {
                int choice = options[i][pick[i]];
                if (choice < 0)
                    p.x_iso.insert(members[i]);
                else {
                    p.x_epn.insert(members[i]);
                    p.epn_choice[members[i]] = choice;
                }
            }
            ++visited;
            if (! visit(p))
                return true;

            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == options[i].size())
                pick[i++] = 0;
            if (i == pick.size())
                return true;
        }
    }

    auto enumerate_flip_sets(const Graph & g, VertexSet x, std::size_t cap) -> FlipEnumeration
    {
        FlipEnumeration result;
        result.truncated = ! visit_flip_partitions(g, x, cap, [&](const EpnIsoPartition & p) {
            result.sets.push_back(flip_set(g, x, p));
            return true;
        });
        std::sort(result.sets.begin(), result.sets.end());
        result.sets.erase(std::unique(result.sets.begin(), result.sets.end()), result.sets.end());
        return result;
    }

    auto find_skip_witness(const Graph & g, VertexSet x, int out_v, int in_v) -> std::optional<SkipWitness>
    {
        if (out_v < 0 || in_v < 0 || out_v >= g.order() || in_v >= g.order())
            return std::nullopt;
        if (! x.contains(out_v) || x.contains(in_v) || g.adjacent(out_v, in_v))
            return std::nullopt;
        VertexSet common = g.neighbours(out_v) & g.neighbours(in_v);
        for (int hub : common & x)
            for (int far : (common - x) - g.neighbours(hub))
                return SkipWitness{hub, far};
        return std::nullopt;
    }

    auto skip_set(const Graph & g, VertexSet x, int out_v, int in_v) -> VertexSet
    {
        check_in_range(g, x);
        if (out_v < 0 || in_v < 0 || out_v >= g.order() || in_v >= g.order())
            throw Error{ErrorCode::PreconditionViolated, "skip endpoints outside the graph"};
        if (! x.contains(out_v) || x.contains(in_v))
            throw Error{ErrorCode::PreconditionViolated, "need " + std::to_string(out_v) + " in and "
                + std::to_string(in_v) + " outside " + x.to_string()};
        if (g.adjacent(out_v, in_v))
            throw Error{ErrorCode::PreconditionViolated, std::to_string(out_v) + " and " + std::to_string(in_v)
                + " are adjacent; that is a swap, not a skip"};
        if (! find_skip_witness(g, x, out_v, in_v))
            throw Error{ErrorCode::PreconditionViolated, "no induced 4-cycle puts " + std::to_string(out_v) + " and "
                + std::to_string(in_v) + " at opposite corners"};

        VertexSet result = x.without(out_v).with(in_v);
        if (! is_irredundant(g, result))
            throw Error{ErrorCode::NotIrredundantResult, result.to_string() + " is not irredundant"};
        return result;
    }

    auto FourCluster::node_set() const -> std::array<int, 4>
    {
        std::array<int, 4> s{x, x_prime, u, u_prime};
        std::sort(s.begin(), s.end());
        return s;
    }

    namespace
    {
        // Edges of G' in role positions 0..5 = x1, x2, x3, x1', x2', x3'.
        constexpr std::array<Edge, 7> gprime_pattern{{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}};

        auto matches_gprime(const Graph & g, const std::array<int, 6> & z) -> bool
        {
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    bool want = std::find(gprime_pattern.begin(), gprime_pattern.end(), Edge{i, j}) != gprime_pattern.end();
                    if (g.adjacent(z[i], z[j]) != want)
                        return false;
                }
            return true;
        }
    }

    auto find_four_clusters(const IRGraph & h) -> std::vector<FourCluster>
    {
        const Graph & g = h.base();
        std::vector<FourCluster> result;
        std::vector<std::array<int, 4>> seen;

        for (int i = 0; i < h.order(); ++i) {
            VertexSet x = h.nodes()[i];
            VertexSet active;
            for (int v : x)
                if (g.neighbours(v).intersects(x))
                    active.insert(v);
            if (active.size() != 3)
                continue;

            std::array<int, 3> roles{};
            std::ranges::copy(active.members(), roles.begin());
            do {
                auto [x1, x2, x3] = roles;
                for (int y1 : external_private_neighbourhood(g, x, x1))
                    for (int y2 : external_private_neighbourhood(g, x, x2))
                        for (int y3 : external_private_neighbourhood(g, x, x3)) {
                            std::array<int, 6> z{x1, x2, x3, y1, y2, y3};
                            if (! matches_gprime(g, z))
                                continue;

                            EpnIsoPartition p{active, x - active, {{x1, y1}, {x2, y2}, {x3, y3}}};
                            VertexSet flipped = flip_set(g, x, p);
                            VertexSet u, u_prime;
                            try {
                                u = skip_set(g, x, x3, y1);
                                u_prime = skip_set(g, flipped, y1, x3);
                            }
                            catch (const Error &) {
                                continue;
                            }
                            auto xi = h.find(flipped), ui = h.find(u), upi = h.find(u_prime);
                            if (! xi || ! ui || ! upi)
                                continue;

                            FourCluster c{i, *xi, *ui, *upi, z, {x1, x3, y3, y1}};
                            auto key = c.node_set();
                            if (std::ranges::find(seen, key) != seen.end())
                                continue;
                            seen.push_back(key);
                            result.push_back(c);
                        }
            } while (std::next_permutation(roles.begin(), roles.end()));
        }
        return result;
    }

    auto leaves(const IRGraph & h) -> std::vector<int>
    {
        std::vector<int> result;
        for (int i = 0; i < h.order(); ++i)
            if (h.structure().degree(i) == 1)
                result.push_back(i);
        return result;
    }

    auto leaves_partitioned_by_clusters(const IRGraph & h, const std::vector<FourCluster> & clusters) -> bool
    {
        std::vector<int> covered;
        for (auto & c : clusters)
            for (int node : c.node_set())
                covered.push_back(node);
        std::sort(covered.begin(), covered.end());
        if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
            return false;
        return covered == leaves(h);
    }
}
