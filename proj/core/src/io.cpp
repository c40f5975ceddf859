#include <irr/error.hpp>
#include <irr/io.hpp>

#include <charconv>
#include <sstream>
#include <vector>

namespace irr
{
    namespace
    {
        constexpr int bias = 63;
        constexpr int max_graph6_order = 62;

        auto edge_bits(int n) -> int { return n * (n - 1) / 2; }
        auto body_length(int n) -> int { return (edge_bits(n) + 5) / 6; }

        auto malformed(const std::string & why) -> Error { return Error{ErrorCode::MalformedGraph6, why}; }
    }

    auto parse_graph6(std::string_view line) -> Graph
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);

        if (line.starts_with(">>graph6<<"))
            throw malformed("graph6 headers are not supported");
        if (line.empty())
            throw malformed("empty line");

        for (char c : line)
            if (static_cast<unsigned char>(c) < bias || static_cast<unsigned char>(c) > 126)
                throw malformed("byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");

        int n = line[0] - bias;
        if (n > max_graph6_order)
            throw Error{ErrorCode::CapacityExceeded, "multi-byte graph6 size form (n > 62) is not supported"};

        auto body = line.substr(1);
        if (static_cast<int>(body.size()) != body_length(n))
            throw malformed("expected " + std::to_string(body_length(n)) + " data bytes for " + std::to_string(n)
                + " vertices, got " + std::to_string(body.size()));

        std::vector<Edge> edges;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = body[k / 6] - bias;
                if ((byte >> (5 - k % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        for (; k < 6 * static_cast<int>(body.size()); ++k)
            if (((body[k / 6] - bias) >> (5 - k % 6)) & 1)
                throw malformed("nonzero padding bits");

        return graph_from_edges(n, edges);
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        const int n = g.order();
        if (n > max_graph6_order)
            throw Error{ErrorCode::CapacityExceeded, "graph6 single-byte size form holds at most 62 vertices"};

        std::vector<int> body(body_length(n), 0);
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.adjacent(i, j))
                    body[k / 6] |= 1 << (5 - k % 6);
        std::string out(1, static_cast<char>(bias + n));
        for (int b : body)
            out += static_cast<char>(bias + b);
        return out;
    }

    auto looks_like_graph6(std::string_view line) -> bool
    {
        try {
            parse_graph6(line);
            return true;
        }
        catch (const Error &) {
            return false;
        }
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::vector<long> numbers;
        std::istringstream lines{std::string{text}};
        std::string line;
        int line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream tokens{line};
            std::string token;
            while (tokens >> token) {
                long value = 0;
                auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || end != token.data() + token.size())
                    throw Error{ErrorCode::MalformedEdgeList,
                        "line " + std::to_string(line_no) + ": '" + token + "' is not an integer"};
                numbers.push_back(value);
            }
        }

        if (numbers.size() < 2)
            throw Error{ErrorCode::MalformedEdgeList, "missing 'n m' header"};
        long n = numbers[0], m = numbers[1];
        if (n < 0 || m < 0)
            throw Error{ErrorCode::MalformedEdgeList, "negative vertex or edge count"};
        if (static_cast<long>(numbers.size()) != 2 + 2 * m)
            throw Error{ErrorCode::MalformedEdgeList, "header announces " + std::to_string(m) + " edges but "
                + std::to_string(numbers.size() - 2) + " endpoint values follow"};
        if (n > max_order)
            throw Error{ErrorCode::CapacityExceeded, std::to_string(n) + " vertices, capacity is 64"};

        std::vector<Edge> edges;
        for (long e = 0; e < m; ++e) {
            long u = numbers[2 + 2 * e], v = numbers[3 + 2 * e];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error{ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")"};
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        return graph_from_edges(static_cast<int>(n), edges);
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        auto edges = g.edges();
        std::ostringstream out;
        out << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
