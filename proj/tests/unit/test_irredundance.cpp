#include <irr/constructions.hpp>
#include <irr/error.hpp>
#include <irr/irredundance.hpp>

#include "doctest.h"
#include "naive.hpp"

using namespace irr;
using testing::Members;

namespace
{
    auto sets_of(std::initializer_list<std::initializer_list<int>> lists) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (auto l : lists)
            out.emplace_back(l);
        return out;
    }
}

TEST_CASE("private neighbourhoods")
{
    auto p4 = build_path(4);
    // {0, 2}: 0 is isolated in the induced graph, 1 is shared
    CHECK(private_neighbourhood(p4, VertexSet{0, 2}, 0) == VertexSet{0});
    CHECK(private_neighbourhood(p4, VertexSet{0, 2}, 2) == VertexSet{2, 3});
    CHECK(external_private_neighbourhood(p4, VertexSet{0, 2}, 2) == VertexSet{3});
    CHECK(external_private_neighbourhood(p4, VertexSet{0, 2}, 0).empty());
    // adjacent members never keep themselves
    CHECK(private_neighbourhood(p4, VertexSet{1, 2}, 1) == VertexSet{0});
    CHECK_THROWS_AS(private_neighbourhood(p4, VertexSet{1, 2}, 0), Error);

    auto [g, roles] = build_gprime();
    auto x = roles.set({"x1", "x2", "x3"});
    CHECK(external_private_neighbourhood(g, x, roles.vertex("x1")) == roles.set({"x1'"}));
    CHECK(external_private_neighbourhood(g, x, roles.vertex("x2")) == roles.set({"x2'"}));
    CHECK(external_private_neighbourhood(g, x, roles.vertex("x3")) == roles.set({"x3'"}));
}

TEST_CASE("irredundance of small sets")
{
    auto p3 = build_path(3);
    CHECK(is_irredundant(p3, VertexSet{}));
    CHECK(is_irredundant(p3, VertexSet{1}));
    CHECK(is_irredundant(p3, VertexSet{0, 2}));
    CHECK_FALSE(is_irredundant(p3, VertexSet{0, 1, 2}));
    CHECK_FALSE(is_irredundant(build_complete(3), VertexSet{0, 1}));
}

TEST_CASE("IR of named graphs")
{
    CHECK(ir_number(graph_from_edges(0, {})) == 0);
    CHECK(ir_number(graph_from_edges(4, {})) == 4);
    CHECK(ir_number(build_path(4)) == 2);
    CHECK(ir_number(build_path(5)) == 3);
    CHECK(ir_number(build_cycle(6)) == 3);
    CHECK(ir_number(build_star(3)) == 3);
    CHECK(ir_number(build_double_star(2, 2)) == 4);
    for (int n = 1; n <= 5; ++n) {
        CHECK(ir_number(build_complete(n)) == 1);
        CHECK(all_ir_sets(build_complete(n)).size() == static_cast<std::size_t>(n));
    }

    CHECK(all_ir_sets(build_path(4)) == sets_of({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(all_ir_sets(build_cycle(6)) == sets_of({{0, 2, 4}, {1, 3, 5}}));
    CHECK(all_ir_sets(build_gprime().graph)
        == sets_of({{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}));
    CHECK(all_ir_sets(build_gn(1).graph)
        == sets_of({{0, 2, 4}, {0, 2, 5}, {0, 4, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}}));
    CHECK(all_ir_sets(graph_from_edges(0, {})) == sets_of({{}}));
}

TEST_CASE("search agrees with the naive sweep")
{
    std::mt19937_64 rng{1234};
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testing::random_graph(rng, 1, 11);
        testing::NaiveGraph naive{g};
        auto expected = testing::naive_ir_sets(naive);
        CHECK(ir_number(g) == expected.ir);
        CHECK(testing::to_members(all_ir_sets(g)) == expected.sets);
        for (auto s : all_ir_sets(g))
            CHECK(is_irredundant(g, s));
    }
}

TEST_CASE("fixed-size enumeration agrees with the naive sweep")
{
    std::mt19937_64 rng{4321};
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testing::random_graph(rng, 2, 9);
        testing::NaiveGraph naive{g};
        for (int k = 0; k <= g.order(); ++k) {
            std::vector<Members> expected;
            for (unsigned long mask = 0; mask < (1UL << g.order()); ++mask) {
                auto d = testing::members_of(mask, g.order());
                if (static_cast<int>(d.size()) == k && testing::naive_irredundant(naive, d))
                    expected.push_back(d);
            }
            std::sort(expected.begin(), expected.end());
            CHECK(testing::to_members(irredundant_sets_of_size(g, k)) == expected);
        }
    }
}

TEST_CASE("worker count does not change results")
{
    std::mt19937_64 rng{555};
    for (int trial = 0; trial < 15; ++trial) {
        auto g = testing::random_graph(rng, 6, 16);
        CHECK(ir_number(g, {.workers = 4}) == ir_number(g));
        CHECK(all_ir_sets(g, {.workers = 3}) == all_ir_sets(g));
    }
    CHECK(all_ir_sets(build_gn(3).graph, {.workers = 4}) == expected_ir_sets_gn(3));
}

TEST_CASE("irredundance is hereditary and private neighbourhoods are disjoint")
{
    std::mt19937_64 rng{31337};
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing::random_graph(rng, 2, 14);
        auto sets = all_ir_sets(g);
        auto d = sets[std::uniform_int_distribution<std::size_t>{0, sets.size() - 1}(rng)];
        auto sub = VertexSet::from_bits(d.bits() & std::uniform_int_distribution<std::uint64_t>{}(rng));
        CHECK(is_irredundant(g, sub));
        VertexSet seen;
        for (int v : d) {
            auto pn = private_neighbourhood(g, d, v);
            CHECK_FALSE(pn.empty());
            CHECK_FALSE(pn.intersects(seen));
            CHECK(external_private_neighbourhood(g, d, v) == pn - d);
            seen |= pn;
        }
    }
}

TEST_CASE("EPN/isolated partitions")
{
    auto [g, roles] = build_gprime();
    auto x = roles.set({"x1", "x2", "x3"});
    auto p = epn_iso_partition(g, x);
    CHECK(p.x_epn == x);
    CHECK(p.x_iso.empty());
    CHECK(p.epn_choice == std::map<int, int>{{0, 3}, {1, 4}, {2, 5}});
    CHECK(partition_problem(g, x, p).empty());

    // P5's {0,2,4}: all isolated; 0 and 4 have no external private neighbours
    auto p5 = build_path(5);
    auto keep = epn_iso_partition(p5, VertexSet{0, 2, 4});
    CHECK(keep.x_epn.empty());
    CHECK(keep.x_iso == VertexSet{0, 2, 4});
    auto flip = epn_iso_partition(build_star(3), VertexSet{1, 2, 3}, IsolatedPolicy::Flip);
    CHECK(flip.x_epn.empty());

    auto p4 = build_path(4);
    auto both = epn_iso_partition(p4, VertexSet{0, 2}, IsolatedPolicy::Flip);
    CHECK(both.x_epn == VertexSet{2});
    CHECK(both.epn_choice == std::map<int, int>{{2, 3}});

    CHECK_THROWS_AS(epn_iso_partition(build_path(3), VertexSet{0, 1, 2}), Error);

    auto bad = p;
    bad.epn_choice[0] = 4;
    CHECK_FALSE(partition_problem(g, x, bad).empty());
    bad = p;
    bad.x_epn = x.without(0);
    bad.x_iso = VertexSet{0};
    bad.epn_choice.erase(0);
    CHECK_FALSE(partition_problem(g, x, bad).empty());  // x1 has positive degree in G[X]
}
