#ifndef IRR_RECONFIG_HPP
#define IRR_RECONFIG_HPP

#include <irr/irredundance.hpp>
#include <irr/structure.hpp>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace irr
{
    /// A vertex swapped out of one set and the adjacent vertex swapped in.
    struct Swap
    {
        int out;
        int in;

        friend auto operator==(const Swap &, const Swap &) -> bool = default;
    };

    /// (u, v) with e = (d - {u}) + {v} and u ~ v; nullopt otherwise, including d == e.
    auto swap_adjacent(const Graph & g, VertexSet d, VertexSet e) -> std::optional<Swap>;

    struct IREdge
    {
        int a;
        int b;
        /// swap.out belongs to node a, swap.in to node b
        Swap swap;

        friend auto operator==(const IREdge &, const IREdge &) -> bool = default;
    };

    /**
     * The IR-graph of a base graph: nodes are the IR-sets in all_ir_sets
     * order, edges join sets one adjacent swap apart and are stored once
     * with a < b, sorted.
     */
    class IRGraph
    {
    public:
        /// `nodes` must be sorted; edges refer to node positions.
        IRGraph(Graph base, std::vector<VertexSet> nodes, std::vector<IREdge> edges);

        auto base() const -> const Graph & { return _base; }
        auto nodes() const -> const std::vector<VertexSet> & { return _nodes; }
        auto edges() const -> const std::vector<IREdge> & { return _edges; }
        auto order() const -> int { return static_cast<int>(_nodes.size()); }

        /// Index of an IR-set, or nullopt.
        auto find(VertexSet s) const -> std::optional<int>;

        /// The node/edge graph.
        auto structure() const -> const SparseGraph & { return _structure; }
        /// Computed on each call.
        auto shape() const -> ShapeClass;

    private:
        Graph _base;
        std::vector<VertexSet> _nodes;
        std::vector<IREdge> _edges;
        SparseGraph _structure;
    };

    struct BuildOptions
    {
        SearchOptions search{};
        /// Throws TooManyIRSets past this many nodes.
        std::size_t max_nodes = 100'000;
    };

    auto build_ir_graph(const Graph & g, const BuildOptions & options = {}) -> IRGraph;

    /// {"nodes":[[..],..], "edges":[{"a":..,"b":..,"swap":[u,v]},..], "shape":"..."}
    auto to_json(const IRGraph & h) -> std::string;

    /**
     * (x - x_epn) + chosen external private neighbours. Throws
     * InvalidPartition if the partition does not fit x, and InternalError if
     * the result is not irredundant (a flip-set of an irredundant set always
     * is).
     */
    auto flip_set(const Graph & g, VertexSet x, const EpnIsoPartition & partition) -> VertexSet;

    struct FlipEnumeration
    {
        std::vector<VertexSet> sets;
        bool truncated = false;
    };

    /**
     * Calls `visit` once per partition of x: every choice of external private
     * neighbour for members with positive degree in G[x], and for isolated
     * members with external private neighbours either staying or any choice.
     * Stops after `cap` partitions (returns false) or when `visit` returns false.
     */
    auto visit_flip_partitions(const Graph & g, VertexSet x, std::size_t cap,
        const std::function<bool (const EpnIsoPartition &)> & visit) -> bool;

    /// Distinct flip-sets over all partitions, sorted; at most `cap` partitions are tried.
    auto enumerate_flip_sets(const Graph & g, VertexSet x, std::size_t cap = 10'000) -> FlipEnumeration;

    /**
     * The witness making a skip legal: out_v and in_v are opposite corners of
     * the induced 4-cycle (out_v, hub, in_v, far), hub in x and far outside x.
     */
    struct SkipWitness
    {
        int hub;
        int far;
    };

    /// Least witness for skipping out_v to in_v within x, if any.
    auto find_skip_witness(const Graph & g, VertexSet x, int out_v, int in_v) -> std::optional<SkipWitness>;

    /**
     * (x - {out_v}) + {in_v}, where out_v and in_v are the nonadjacent
     * corners of an induced 4-cycle with the other two corners split between
     * x and its complement. Throws PreconditionViolated off-pattern and
     * NotIrredundantResult if the result is redundant.
     */
    auto skip_set(const Graph & g, VertexSet x, int out_v, int in_v) -> VertexSet;

    /**
     * Four IR-sets {X, X', U, U'} grounded by six vertices x1, x2, x3, x1',
     * x2', x3' inducing the G' pattern: X' flips x1,x2,x3 to x1',x2',x3';
     * U skips x3 to x1' in X; U' skips x1' to x3 in X'.
     */
    struct FourCluster
    {
        int x;
        int x_prime;
        int u;
        int u_prime;
        /// x1, x2, x3, x1', x2', x3'
        std::array<int, 6> grounding;
        /// (x1, x3, x3', x1')
        std::array<int, 4> cycle;

        auto node_set() const -> std::array<int, 4>;
    };

    /// Every 4-cluster, one per distinct node set, in order of first discovery by node index.
    auto find_four_clusters(const IRGraph & h) -> std::vector<FourCluster>;

    /// Leaves of the IR-graph (degree-1 nodes), ascending.
    auto leaves(const IRGraph & h) -> std::vector<int>;

    /// True if the clusters are pairwise disjoint and together cover exactly the leaves.
    auto leaves_partitioned_by_clusters(const IRGraph & h, const std::vector<FourCluster> & clusters) -> bool;
}

#endif
