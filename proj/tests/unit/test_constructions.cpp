#include <irr/constructions.hpp>
#include <irr/error.hpp>
#include <irr/irredundance.hpp>
#include <irr/reconfig.hpp>

#include "doctest.h"

using namespace irr;

TEST_CASE("G_n size and labels")
{
    const int edge_counts[] = {7, 15, 25, 37};
    for (int n = 1; n <= 4; ++n) {
        auto [g, roles] = build_gn(n);
        CHECK(g.order() == 4 * n + 2);
        CHECK(g.size() == edge_counts[n - 1]);
        CHECK(roles.size() == g.order());
        CHECK(roles.vertex("u") == 0);
        CHECK(roles.vertex("v") == 1);
        CHECK(roles.vertex("a1") == 2);
        CHECK(roles.vertex("b1") == 2 + n);
        CHECK(roles.vertex("c1") == 2 + 2 * n);
        CHECK(roles.vertex("d" + std::to_string(n)) == 4 * n + 1);
        CHECK(is_connected(g));
    }
}

TEST_CASE("G_n adjacency")
{
    auto [g, r] = build_gn(3);
    CHECK(g.adjacent(r.vertex("u"), r.vertex("v")));
    CHECK(g.adjacent(r.vertex("u"), r.vertex("a2")));
    CHECK_FALSE(g.adjacent(r.vertex("u"), r.vertex("b2")));
    CHECK(g.adjacent(r.vertex("a1"), r.vertex("b2")));
    CHECK_FALSE(g.adjacent(r.vertex("a2"), r.vertex("b2")));
    CHECK_FALSE(g.adjacent(r.vertex("a1"), r.vertex("a2")));
    CHECK(g.neighbours(r.vertex("c2")) == r.set({"a2", "b2"}));
    CHECK(g.neighbours(r.vertex("d3")) == r.set({"a3", "b3"}));
}

TEST_CASE("G_n census")
{
    auto named = named_ir_sets_gn(2);
    REQUIRE(named.size() == 10);
    auto [g, r] = build_gn(2);
    CHECK(named[0].first == "X");
    CHECK(named[0].second == r.set({"u", "c1", "c2", "d1", "d2"}));
    CHECK(named[1].first == "X1");
    CHECK(named[1].second == r.set({"u", "a1", "c2", "d1", "d2"}));
    CHECK(named[2].first == "X1'");
    CHECK(named[2].second == r.set({"u", "a1", "c1", "c2", "d2"}));
    CHECK(named[5].first == "Y");
    CHECK(named[5].second == r.set({"v", "c1", "c2", "d1", "d2"}));
    CHECK(named[9].first == "Y2'");
    CHECK(named[9].second == r.set({"v", "b2", "c1", "c2", "d1"}));

    for (int n = 1; n <= 3; ++n) {
        auto expected = expected_ir_sets_gn(n);
        CHECK(expected.size() == static_cast<std::size_t>(4 * n + 2));
        CHECK(std::is_sorted(expected.begin(), expected.end()));
        CHECK(all_ir_sets(build_gn(n).graph) == expected);
    }
}

TEST_CASE("G_n bounds")
{
    CHECK_THROWS_AS(build_gn(0), Error);
    CHECK(build_gn(max_gn).graph.order() == 62);
    try {
        build_gn(max_gn + 1);
        FAIL("expected CapacityExceeded");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::CapacityExceeded);
    }
}

TEST_CASE("G' pattern")
{
    auto [g, r] = build_gprime();
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);
    auto edge = [&](const char * a, const char * b) { return g.adjacent(r.vertex(a), r.vertex(b)); };
    CHECK(edge("x1", "x2"));
    CHECK(edge("x1", "x3"));
    CHECK(edge("x1", "x1'"));
    CHECK(edge("x2", "x2'"));
    CHECK(edge("x3", "x3'"));
    CHECK(edge("x1'", "x3'"));
    CHECK(edge("x2'", "x3'"));
    CHECK_FALSE(edge("x2", "x3"));
    CHECK_THROWS_AS(r.vertex("x4"), Error);
    CHECK_FALSE(r.find("x4").has_value());
}

TEST_CASE("role maps reject duplicates")
{
    CHECK_THROWS_AS(RoleMap({"a", "b", "a"}), Error);
}

TEST_CASE("small families")
{
    CHECK(build_double_star(2, 3).order() == 7);
    CHECK(build_double_star(2, 3).degree(0) == 3);
    CHECK(build_double_star(2, 3).degree(1) == 4);
    CHECK_THROWS_AS(build_double_star(0, 2), Error);
    CHECK_THROWS_AS(build_double_star(40, 40), Error);
    CHECK(build_path(1).size() == 0);
    CHECK_THROWS_AS(build_path(0), Error);
    CHECK(build_cycle(3) == build_complete(3));
    CHECK_THROWS_AS(build_cycle(2), Error);
    CHECK(build_complete(5).size() == 10);
    CHECK(build_star(4).degree(0) == 4);
    CHECK_THROWS_AS(build_star(0), Error);
}
