#include "ordtree/constructions.hpp"
#include "ordtree/walks.hpp"

#include <doctest.h>

using namespace ordtree;

TEST_CASE("colored bipartite validation")
{
    CHECK_THROWS_AS(ColoredBipartite(make_cg(4, {{1, 2}})), InputError);
    CHECK_THROWS_AS(ColoredBipartite(Graph(Mode::cyclic, 4, {{1, 3}}, {1})), InputError);
    CHECK_THROWS_AS(ColoredBipartite(Graph(Mode::cyclic, 4, {{1, 2}, {1, 4}}, {1, 1})), InputError);
    ColoredBipartite ok(f_n(16));
    CHECK(ok.colors() == 3);
}

TEST_CASE("walk examples on F_16")
{
    ColoredBipartite g(f_n(16));
    Walk4 fast{WalkKind::fast, {10, 3, 4, 1, 8}, {3, 1, 2, 3}};
    CHECK(is_forbidden_walk(g, fast));
    Walk4 slow{WalkKind::slow, {8, 5, 6, 3, 10}, {2, 1, 2, 3}};
    CHECK(is_forbidden_walk(g, slow, Side::B));
    CHECK_FALSE(is_forbidden_walk(g, slow, Side::A));

    auto f = find_forbidden_walk(g, WalkKind::fast);
    REQUIRE(f);
    CHECK(is_forbidden_walk(g, *f));
    auto s = find_forbidden_walk(g, WalkKind::slow, Side::B);
    REQUIRE(s);
    CHECK(is_forbidden_walk(g, *s, Side::B));
}

TEST_CASE("one color never has a forbidden walk")
{
    Graph g = f_n(16);
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
        if (g.colors()[static_cast<std::size_t>(i)] == 2)
            keep.push_back(i);
    ColoredBipartite one(g.edge_subgraph(keep));
    for (auto kind : {WalkKind::fast, WalkKind::slow})
        for (auto side : {Side::A, Side::B}) {
            CHECK_FALSE(find_forbidden_walk(one, kind, side));
            auto x = extract_walk_free(one, kind, side);
            CHECK(x.subgraph == one.graph());
        }
}

TEST_CASE("extraction")
{
    ColoredBipartite g16(f_n(16));
    auto x = extract_walk_free(g16, WalkKind::fast);
    CHECK(x.bound == 1);
    CHECK(x.exhaustive);
    CHECK(static_cast<long long>(x.achieved) >= x.bound);
    CHECK_FALSE(find_forbidden_walk(ColoredBipartite(x.subgraph), WalkKind::fast));

    ColoredBipartite g64(f_n(64));
    auto y = extract_walk_free(g64, WalkKind::slow, Side::A, 3);
    CHECK(y.bound == 1);
    CHECK_FALSE(y.exhaustive);
    CHECK(y.achieved >= 16);
    CHECK_FALSE(find_forbidden_walk(ColoredBipartite(y.subgraph), WalkKind::slow, Side::A));
    CHECK(extract_walk_free(g64, WalkKind::slow, Side::A, 3).subgraph == y.subgraph);
}

TEST_CASE("size bound")
{
    CHECK(walk_free_bound(1, 100) == 0);
    CHECK(walk_free_bound(3, 12) == 1);
    CHECK(walk_free_bound(5, 80) == 1);
    CHECK(walk_free_bound(2, 961) == 2);
}
