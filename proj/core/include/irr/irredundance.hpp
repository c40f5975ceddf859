#ifndef IRR_IRREDUNDANCE_HPP
#define IRR_IRREDUNDANCE_HPP

#include <irr/graph.hpp>

#include <map>
#include <string>
#include <vector>

namespace irr
{
    /// PN(v, d): vertices dominated by v and by no other member of d. Throws NotAMember if v is not in d.
    auto private_neighbourhood(const Graph & g, VertexSet d, int v) -> VertexSet;

    /// PN(v, d) without v itself.
    auto external_private_neighbourhood(const Graph & g, VertexSet d, int v) -> VertexSet;

    /// Every member of d has a private neighbour. The empty set is irredundant.
    auto is_irredundant(const Graph & g, VertexSet d) -> bool;

    struct SearchOptions
    {
        /// Top-level branches run on this many threads; 0 or 1 means inline.
        int workers = 1;
    };

    /// The upper irredundance number IR(g).
    auto ir_number(const Graph & g, const SearchOptions & options = {}) -> int;

    /// Every irredundant set of size IR(g), sorted, without duplicates.
    auto all_ir_sets(const Graph & g, const SearchOptions & options = {}) -> std::vector<VertexSet>;

    /// Every irredundant set of exactly `size` vertices, sorted.
    auto irredundant_sets_of_size(const Graph & g, int size, const SearchOptions & options = {}) -> std::vector<VertexSet>;

    /// Where isolated members of G[x] that have external private neighbours go.
    enum class IsolatedPolicy
    {
        KeepIsolated,
        Flip
    };

    /**
     * A weak partition of an irredundant set into the members that flip
     * (x_epn, each with a chosen external private neighbour) and isolated
     * members that stay (x_iso).
     */
    struct EpnIsoPartition
    {
        VertexSet x_epn;
        VertexSet x_iso;
        std::map<int, int> epn_choice;

        friend auto operator==(const EpnIsoPartition &, const EpnIsoPartition &) -> bool = default;
    };

    /**
     * Members with positive degree in G[x] always go to x_epn; the policy
     * decides the rest. Choices take the lowest-index external private
     * neighbour. Throws NotIrredundant.
     */
    auto epn_iso_partition(const Graph & g, VertexSet x, IsolatedPolicy policy = IsolatedPolicy::KeepIsolated)
        -> EpnIsoPartition;

    /// Checks the partition invariants against x; returns an empty string if valid, else the reason.
    auto partition_problem(const Graph & g, VertexSet x, const EpnIsoPartition & p) -> std::string;
}

#endif
