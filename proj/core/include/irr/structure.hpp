#ifndef IRR_STRUCTURE_HPP
#define IRR_STRUCTURE_HPP

#include <irr/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace irr
{
    /// Longest shortest path; nullopt when the graph is disconnected. 0 for order <= 1.
    auto diameter(const Graph & g) -> std::optional<int>;
    auto diameter(const SparseGraph & g) -> std::optional<int>;

    /// BFS distances from `source`, -1 for unreachable vertices.
    auto distances_from(const SparseGraph & g, int source) -> std::vector<int>;

    /**
     * Four vertices (a, b, c, d) in cycle order inducing a chordless 4-cycle,
     * with a the smallest of them and b < d. Among all such tuples the
     * lexicographically least is returned.
     */
    auto find_induced_c4(const Graph & g) -> std::optional<std::array<int, 4>>;
    auto find_induced_c4(const SparseGraph & g) -> std::optional<std::array<int, 4>>;

    namespace shape
    {
        struct Complete { int order; auto operator==(const Complete &) const -> bool = default; };
        struct Cycle { int order; auto operator==(const Cycle &) const -> bool = default; };
        struct Star { int leaves; auto operator==(const Star &) const -> bool = default; };
        /// Two adjacent centres with `a` and `b` leaves, a <= b.
        struct DoubleStar { int a; int b; auto operator==(const DoubleStar &) const -> bool = default; };
        struct Path { int order; auto operator==(const Path &) const -> bool = default; };
        struct Tree { int order; int diameter; auto operator==(const Tree &) const -> bool = default; };
        struct Other { bool connected; int order; int size; auto operator==(const Other &) const -> bool = default; };
    }

    using ShapeClass = std::variant<shape::Complete, shape::Cycle, shape::Star, shape::DoubleStar,
          shape::Path, shape::Tree, shape::Other>;

    /**
     * Recognises the shape with precedence
     * Complete > Cycle > Star > DoubleStar > Path > Tree > Other,
     * so K_2 is Complete(2), K_3 is Complete(3), P_3 is Star(2) and P_4 is DoubleStar(1,1).
     */
    auto classify_shape(const Graph & g) -> ShapeClass;
    auto classify_shape(const SparseGraph & g) -> ShapeClass;

    /// "DoubleStar(2,2)", "Tree(order=7,diameter=4)", ...
    auto to_string(const ShapeClass & s) -> std::string;
    /// "complete", "cycle", "star", "double-star", "path", "tree", "other"
    auto shape_tag(const ShapeClass & s) -> std::string;

    /// Backtracking with degree and neighbour-degree pruning; meant for small graphs.
    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;
    auto are_isomorphic(const SparseGraph & g, const SparseGraph & h) -> bool;

    /// `graph { ... }` with one node statement per vertex and one edge line per edge, sorted.
    auto export_dot(const Graph & g, const std::vector<std::string> & labels = {}) -> std::string;
    auto export_dot(const SparseGraph & g, const std::vector<std::string> & labels = {}) -> std::string;
}

#endif
