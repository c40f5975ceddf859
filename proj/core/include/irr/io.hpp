#ifndef IRR_IO_HPP
#define IRR_IO_HPP

#include <irr/graph.hpp>

#include <string>
#include <string_view>

namespace irr
{
    /**
     * Decodes one graph6 line (no header, single-byte size form, n <= 62).
     * Trailing whitespace is ignored. Throws MalformedGraph6 on a bad length
     * or a byte outside 63..126, and on a ">>graph6<<" header; throws
     * CapacityExceeded for the multi-byte size form.
     */
    auto parse_graph6(std::string_view line) -> Graph;

    /// Throws CapacityExceeded for order > 62.
    auto to_graph6(const Graph & g) -> std::string;

    /// True if `line` is a well-formed graph6 line that parse_graph6 accepts.
    auto looks_like_graph6(std::string_view line) -> bool;

    /**
     * Edge-list text: first line "n m", then m lines "u v". Indices are
     * 0-based; '#' starts a comment. Throws MalformedEdgeList, or the
     * graph_from_edges errors.
     */
    auto parse_edge_list(std::string_view text) -> Graph;
    auto to_edge_list(const Graph & g) -> std::string;
}

#endif
