#include <irr/error.hpp>
#include <irr/graph.hpp>

#include "doctest.h"
#include "naive.hpp"

using namespace irr;

namespace
{
    auto code_of(auto && fn) -> ErrorCode
    {
        try {
            fn();
        }
        catch (const Error & e) {
            return e.code();
        }
        FAIL("no irr::Error thrown");
        return ErrorCode::InternalError;
    }
}

TEST_CASE("graph_from_edges builds a simple undirected graph")
{
    auto g = graph_from_edges(4, {{0, 1}, {2, 1}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.closed_neighbours(0) == VertexSet{0, 1});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("graph_from_edges rejects bad input")
{
    CHECK(code_of([] { graph_from_edges(3, {{0, 3}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { graph_from_edges(3, {{-1, 0}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { graph_from_edges(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { graph_from_edges(65, {}); }) == ErrorCode::CapacityExceeded);
    CHECK(graph_from_edges(64, {{0, 63}}).adjacent(63, 0));
    CHECK(graph_from_edges(0, {}).order() == 0);
}

TEST_CASE("closed neighbourhoods and range checks")
{
    auto g = graph_from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(closed_neighbourhood(g, VertexSet{0, 3}) == VertexSet{0, 1, 3, 4});
    CHECK(closed_neighbourhood(g, VertexSet{}) == VertexSet{});
    CHECK(code_of([&] { closed_neighbourhood(g, VertexSet{7}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("induced subgraphs renumber in ascending order")
{
    auto g = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto sub = induced_subgraph(g, VertexSet{1, 2, 4});
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}});
    CHECK(sub.index_map[4] == 2);
    CHECK(sub.index_map[0] == -1);
}

TEST_CASE("relabel applies a permutation and rejects non-permutations")
{
    auto g = graph_from_edges(3, {{0, 1}});
    std::vector<int> perm{2, 0, 1};
    CHECK(relabel(g, perm).edges() == std::vector<Edge>{{0, 2}});
    std::vector<int> bad{0, 0, 1};
    CHECK(code_of([&] { relabel(g, bad); }) == ErrorCode::InvalidParameter);
    std::vector<int> short_perm{0, 1};
    CHECK(code_of([&] { relabel(g, short_perm); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(graph_from_edges(0, {})));
    CHECK(is_connected(graph_from_edges(1, {})));
    CHECK_FALSE(is_connected(graph_from_edges(2, {})));
    CHECK(is_connected(graph_from_edges(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_connected(graph_from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("sparse graphs agree with dense graphs")
{
    std::mt19937_64 rng{7};
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testing::random_graph(rng, 1, 20);
        SparseGraph s{g};
        REQUIRE(s.order() == g.order());
        CHECK(s.size() == g.size());
        CHECK(s.edges() == g.edges());
        for (int u = 0; u < g.order(); ++u) {
            CHECK(s.degree(u) == g.degree(u));
            CHECK(s.neighbours(u) == g.neighbours(u).members());
            for (int v = 0; v < g.order(); ++v)
                CHECK(s.adjacent(u, v) == g.adjacent(u, v));
        }
    }
    SparseGraph big{200, std::vector<Edge>{{0, 199}, {199, 5}}};
    CHECK(big.adjacent(5, 199));
    CHECK(big.neighbours(199) == std::vector<int>{0, 5});
    CHECK_THROWS_AS(SparseGraph(3, std::vector<Edge>{{0, 0}}), Error);
}
