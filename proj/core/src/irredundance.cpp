#include <irr/error.hpp>
#include <irr/irredundance.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace irr
{
    auto private_neighbourhood(const Graph & g, VertexSet d, int v) -> VertexSet
    {
        check_in_range(g, d);
        if (v < 0 || v >= g.order() || ! d.contains(v))
            throw Error{ErrorCode::NotAMember, std::to_string(v) + " is not in " + d.to_string()};
        VertexSet others;
        for (int w : d.without(v))
            others |= g.closed_neighbours(w);
        return g.closed_neighbours(v) - others;
    }

    auto external_private_neighbourhood(const Graph & g, VertexSet d, int v) -> VertexSet
    {
        return private_neighbourhood(g, d, v).without(v);
    }

    namespace
    {
        /**
         * Domination counts of a set, kept as two masks: vertices dominated
         * exactly once and vertices dominated at least twice. PN(v, D) is
         * then N[v] & once.
         */
        struct Coverage
        {
            VertexSet once;
            VertexSet multi;

            auto add(VertexSet closed) const -> Coverage
            {
                VertexSet m = multi | (once & closed);
                return {(once | closed) - m, m};
            }
        };

        auto coverage_of(const Graph & g, VertexSet d) -> Coverage
        {
            Coverage c;
            for (int v : d)
                c = c.add(g.closed_neighbours(v));
            return c;
        }

        auto all_private(const Graph & g, VertexSet d, const Coverage & c) -> bool
        {
            for (int w : d)
                if (! g.closed_neighbours(w).intersects(c.once))
                    return false;
            return true;
        }

        /**
         * Depth-first extension in vertex order, each set reached once via
         * its increasing member sequence. Supersets of a redundant set are
         * redundant, so redundant prefixes are cut; so are prefixes that
         * cannot reach the size bound with the vertices left.
         */
        class Search
        {
        public:
            Search(const Graph & g) : _g(g), _n(g.order()) {}

            // Largest irredundant set size.
            auto maximum(int workers) -> int
            {
                std::atomic<int> best{_n > 0 ? 1 : 0};
                for_each_branch(workers, [&](int first) {
                    walk_max(VertexSet::singleton(first), coverage_of(_g, VertexSet::singleton(first)), first + 1, best);
                });
                return best.load();
            }

            auto collect(int size, int workers) -> std::vector<VertexSet>
            {
                if (size == 0)
                    return {VertexSet{}};
                std::vector<VertexSet> result;
                std::mutex lock;
                for_each_branch(workers, [&](int first) {
                    if (first + size > _n)
                        return;
                    std::vector<VertexSet> found;
                    walk_collect(VertexSet::singleton(first), coverage_of(_g, VertexSet::singleton(first)), first + 1,
                        size, found);
                    std::lock_guard guard{lock};
                    result.insert(result.end(), found.begin(), found.end());
                });
                std::sort(result.begin(), result.end());
                return result;
            }

        private:
            template <class Fn>
            auto for_each_branch(int workers, Fn && fn) -> void
            {
                if (workers <= 1 || _n <= 1) {
                    for (int v = 0; v < _n; ++v)
                        fn(v);
                    return;
                }
                std::atomic<int> next{0};
                std::vector<std::thread> pool;
                for (int t = 0; t < std::min(workers, _n); ++t)
                    pool.emplace_back([&] {
                        for (int v = next++; v < _n; v = next++)
                            fn(v);
                    });
                for (auto & t : pool)
                    t.join();
            }

            auto walk_max(VertexSet d, const Coverage & c, int from, std::atomic<int> & best) -> void
            {
                int size = d.size();
                int seen = best.load(std::memory_order_relaxed);
                while (size > seen && ! best.compare_exchange_weak(seen, size, std::memory_order_relaxed))
                    ;
                for (int v = from; v < _n; ++v) {
                    if (size + (_n - v) <= best.load(std::memory_order_relaxed))
                        break;
                    VertexSet next = d.with(v);
                    Coverage nc = c.add(_g.closed_neighbours(v));
                    if (all_private(_g, next, nc))
                        walk_max(next, nc, v + 1, best);
                }
            }

            auto walk_collect(VertexSet d, const Coverage & c, int from, int target, std::vector<VertexSet> & out) -> void
            {
                int size = d.size();
                if (size == target) {
                    out.push_back(d);
                    return;
                }
                for (int v = from; v < _n; ++v) {
                    if (size + (_n - v) < target)
                        break;
                    VertexSet next = d.with(v);
                    Coverage nc = c.add(_g.closed_neighbours(v));
                    if (all_private(_g, next, nc))
                        walk_collect(next, nc, v + 1, target, out);
                }
            }

            const Graph & _g;
            int _n;
        };
    }

    auto is_irredundant(const Graph & g, VertexSet d) -> bool
    {
        check_in_range(g, d);
        return all_private(g, d, coverage_of(g, d));
    }

    auto ir_number(const Graph & g, const SearchOptions & options) -> int
    {
        return Search{g}.maximum(options.workers);
    }

    auto irredundant_sets_of_size(const Graph & g, int size, const SearchOptions & options) -> std::vector<VertexSet>
    {
        if (size < 0 || size > g.order())
            return {};
        return Search{g}.collect(size, options.workers);
    }

    auto all_ir_sets(const Graph & g, const SearchOptions & options) -> std::vector<VertexSet>
    {
        return irredundant_sets_of_size(g, ir_number(g, options), options);
    }

    auto epn_iso_partition(const Graph & g, VertexSet x, IsolatedPolicy policy) -> EpnIsoPartition
    {
        if (! is_irredundant(g, x))
            throw Error{ErrorCode::NotIrredundant, x.to_string() + " is not irredundant"};

        EpnIsoPartition p;
        for (int v : x) {
            VertexSet epn = external_private_neighbourhood(g, x, v);
            bool isolated = ! g.neighbours(v).intersects(x);
            if (! isolated || (! epn.empty() && policy == IsolatedPolicy::Flip)) {
                p.x_epn.insert(v);
                p.epn_choice[v] = epn.front();
            }
            else
                p.x_iso.insert(v);
        }
        return p;
    }

    auto partition_problem(const Graph & g, VertexSet x, const EpnIsoPartition & p) -> std::string
    {
        if ((p.x_epn | p.x_iso) != x)
            return "parts do not cover " + x.to_string();
        if (p.x_epn.intersects(p.x_iso))
            return "parts overlap";
        for (int v : p.x_iso)
            if (g.neighbours(v).intersects(x))
                return std::to_string(v) + " is in x_iso but not isolated in G[x]";
        if (p.epn_choice.size() != static_cast<std::size_t>(p.x_epn.size()))
            return "choices do not match x_epn";
        for (auto [v, choice] : p.epn_choice) {
            if (! p.x_epn.contains(v))
                return "choice for " + std::to_string(v) + " outside x_epn";
            if (choice < 0 || choice >= g.order() || ! external_private_neighbourhood(g, x, v).contains(choice))
                return std::to_string(choice) + " is not an external private neighbour of " + std::to_string(v);
        }
        return {};
    }
}
