#include <irr/constructions.hpp>
#include <irr/error.hpp>
#include <irr/io.hpp>
#include <irr/structure.hpp>

#include "doctest.h"
#include "naive.hpp"

#include <numeric>

using namespace irr;

TEST_CASE("diameter")
{
    CHECK(diameter(graph_from_edges(0, {})) == 0);
    CHECK(diameter(graph_from_edges(1, {})) == 0);
    CHECK(diameter(build_path(5)) == 4);
    CHECK(diameter(build_cycle(7)) == 3);
    CHECK(diameter(build_complete(4)) == 1);
    CHECK(diameter(build_double_star(2, 5)) == 3);
    CHECK_FALSE(diameter(graph_from_edges(3, {{0, 1}})).has_value());
    CHECK(diameter(SparseGraph{build_path(9)}) == 8);
}

TEST_CASE("distances from a source")
{
    SparseGraph g{5, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}}};
    CHECK(distances_from(g, 0) == std::vector<int>{0, 1, 2, -1, -1});
}

TEST_CASE("induced 4-cycles")
{
    CHECK(find_induced_c4(build_cycle(4)) == std::array{0, 1, 2, 3});
    CHECK_FALSE(find_induced_c4(build_complete(4)).has_value());
    CHECK_FALSE(find_induced_c4(build_cycle(5)).has_value());
    // K4 minus an edge has a 4-cycle, but with a chord
    CHECK_FALSE(find_induced_c4(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).has_value());
    // x1, x3, x3', x1' in G'
    CHECK(find_induced_c4(build_gprime().graph) == std::array{0, 2, 5, 3});
    // K_{2,3}: least tuple starts at 0
    auto k23 = graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(find_induced_c4(k23) == std::array{0, 2, 1, 3});
    CHECK(find_induced_c4(SparseGraph{k23}) == find_induced_c4(k23));
}

TEST_CASE("induced 4-cycle witnesses are genuine")
{
    std::mt19937_64 rng{44};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing::random_graph(rng, 4, 10);
        auto c = find_induced_c4(g);
        if (! c)
            continue;
        auto [a, b, x, d] = *c;
        CHECK(g.adjacent(a, b));
        CHECK(g.adjacent(b, x));
        CHECK(g.adjacent(x, d));
        CHECK(g.adjacent(d, a));
        CHECK_FALSE(g.adjacent(a, x));
        CHECK_FALSE(g.adjacent(b, d));
        CHECK(a < b);
        CHECK(a < x);
        CHECK(b < d);
    }
}

TEST_CASE("shape precedence")
{
    using namespace irr::shape;
    CHECK(classify_shape(build_complete(1)) == ShapeClass{Complete{1}});
    CHECK(classify_shape(build_complete(2)) == ShapeClass{Complete{2}});
    CHECK(classify_shape(build_complete(3)) == ShapeClass{Complete{3}});
    CHECK(classify_shape(build_cycle(4)) == ShapeClass{Cycle{4}});
    CHECK(classify_shape(build_path(3)) == ShapeClass{Star{2}});
    CHECK(classify_shape(build_star(4)) == ShapeClass{Star{4}});
    CHECK(classify_shape(build_path(4)) == ShapeClass{DoubleStar{1, 1}});
    CHECK(classify_shape(build_double_star(3, 2)) == ShapeClass{DoubleStar{2, 3}});
    CHECK(classify_shape(build_path(5)) == ShapeClass{Path{5}});
    // spider with legs 1, 2, 2
    auto spider = graph_from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    CHECK(classify_shape(spider) == ShapeClass{Tree{6, 4}});
    CHECK(classify_shape(graph_from_edges(3, {{0, 1}})) == ShapeClass{Other{false, 3, 1}});
    CHECK(classify_shape(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})) == ShapeClass{Other{true, 4, 4}});
    // too large for a dense Graph
    std::vector<Edge> big{{0, 1}};
    for (int i = 2; i < 82; ++i)
        big.emplace_back(i < 42 ? 0 : 1, i);
    CHECK(classify_shape(SparseGraph{82, big}) == ShapeClass{DoubleStar{40, 40}});
}

TEST_CASE("shape names")
{
    CHECK(to_string(ShapeClass{shape::DoubleStar{2, 2}}) == "DoubleStar(2,2)");
    CHECK(to_string(ShapeClass{shape::Tree{7, 4}}) == "Tree(order=7,diameter=4)");
    CHECK(shape_tag(ShapeClass{shape::DoubleStar{2, 2}}) == "double-star");
    CHECK(shape_tag(classify_shape(build_cycle(5))) == "cycle");
    CHECK(shape_tag(classify_shape(build_path(6))) == "path");
}

TEST_CASE("isomorphism")
{
    CHECK(are_isomorphic(build_cycle(6), parse_graph6("EhEG")));
    auto two_triangles = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(are_isomorphic(build_cycle(6), two_triangles));
    CHECK_FALSE(are_isomorphic(build_path(4), build_star(3)));
    CHECK_FALSE(are_isomorphic(build_path(4), build_path(5)));
    CHECK(are_isomorphic(graph_from_edges(0, {}), graph_from_edges(0, {})));

    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 100; ++trial) {
        auto g = testing::random_graph(rng, 1, 14);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        CHECK(are_isomorphic(g, h));
        CHECK(are_isomorphic(SparseGraph{g}, SparseGraph{h}));
        // one edge toggled never preserves the edge count
        if (g.order() >= 2) {
            auto edges = h.edges();
            if (! edges.empty()) {
                edges.pop_back();
                CHECK_FALSE(are_isomorphic(g, graph_from_edges(h.order(), edges)));
            }
        }
    }
}

TEST_CASE("DOT export")
{
    auto dot = export_dot(build_path(3), {"a", "b", "c"});
    CHECK(dot == "graph G {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n");
    CHECK(export_dot(graph_from_edges(1, {})).find("\"0\"") != std::string::npos);
    CHECK_THROWS_AS(export_dot(build_path(3), {"a"}), Error);
}
