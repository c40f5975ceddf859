#ifndef IRR_CONSTRUCTIONS_HPP
#define IRR_CONSTRUCTIONS_HPP

#include <irr/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace irr
{
    /// Vertex index <-> role label ("u", "a3", "x2'", ...). Total and injective.
    class RoleMap
    {
    public:
        RoleMap() = default;
        explicit RoleMap(std::vector<std::string> labels);

        auto size() const -> int { return static_cast<int>(_labels.size()); }
        auto label(int v) const -> const std::string & { return _labels.at(v); }
        auto labels() const -> const std::vector<std::string> & { return _labels; }
        /// Throws InvalidParameter for an unknown label.
        auto vertex(std::string_view label) const -> int;
        auto find(std::string_view label) const -> std::optional<int>;
        /// Vertex set for several labels at once.
        auto set(std::initializer_list<std::string_view> labels) const -> VertexSet;

    private:
        std::vector<std::string> _labels;
        std::unordered_map<std::string, int> _index;
    };

    struct Construction
    {
        Graph graph;
        RoleMap roles;
    };

    /// Largest n for which G_n (4n+2 vertices) fits.
    inline constexpr int max_gn = 15;

    /**
     * G_n: hubs u ~ v, u joined to A, v joined to B, A-B edges forming
     * K_{n,n} minus the matching a_i b_i, and each {a_i, b_i, c_i, d_i}
     * inducing the 4-cycle a_i c_i b_i d_i.
     *
     * Indices: u=0, v=1, a_i=1+i, b_i=1+n+i, c_i=1+2n+i, d_i=1+3n+i (i=1..n).
     * Throws InvalidN for n < 1 and CapacityExceeded for n > 15.
     */
    auto build_gn(int n) -> Construction;

    /**
     * The 4n+2 maximum irredundant sets of G_n in closed form:
     * X = C+D+u, X_i = X-c_i+a_i, X_i' = X-d_i+a_i, and the same with v and b_i
     * for Y, Y_i, Y_i'. Sorted like all_ir_sets.
     */
    auto expected_ir_sets_gn(int n) -> std::vector<VertexSet>;

    /// Same sets keyed by name ("X", "X2", "X2'", "Y", ...).
    auto named_ir_sets_gn(int n) -> std::vector<std::pair<std::string, VertexSet>>;

    /**
     * The six-vertex graph G' on x1=0, x2=1, x3=2, x1'=3, x2'=4, x3'=5 with
     * edges x1x2, x1x3, x1x1', x2x2', x3x3', x1'x3', x2'x3'.
     */
    auto build_gprime() -> Construction;

    /// S(a,b); throws InvalidParameter for a or b < 1 and CapacityExceeded past 64 vertices.
    auto build_double_star(int a, int b) -> Graph;

    auto build_path(int n) -> Graph;
    auto build_cycle(int n) -> Graph;
    auto build_complete(int n) -> Graph;
    auto build_star(int leaves) -> Graph;
}

#endif
