#include "ordtree/constructions.hpp"
#include "ordtree/containment.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace ordtree;
using testing_support::naive_contains;
using testing_support::random_graph;

TEST_CASE("containment examples")
{
    Graph p = make_ordered(4, {{1, 3}, {1, 4}, {2, 4}});
    CHECK_FALSE(contains(pow2(16), p));

    Graph a = make_ordered(5, {{1, 3}, {1, 4}, {2, 3}, {2, 5}});
    auto e = find_embedding(fh_q(4), a);
    REQUIRE(e);
    CHECK(e->map == std::vector<int>{2, 3, 5, 6, 7});

    Graph t = make_ordered(4, {{1, 3}, {2, 3}, {2, 4}});
    auto id = find_embedding(t, t);
    REQUIRE(id);
    CHECK(id->map == std::vector<int>{1, 2, 3, 4});

    CHECK_FALSE(contains(f_n0(8), make_cg(4, {{1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("mode mismatch is an input error")
{
    CHECK_THROWS_AS(contains(make_ordered(3, {{1, 2}}), make_cg(2, {{1, 2}})), InputError);
}

TEST_CASE("isolated pattern vertices still take a host slot")
{
    Graph host = make_ordered(3, {{1, 2}});
    CHECK(contains(host, make_ordered(3, {{1, 2}})));
    CHECK_FALSE(contains(host, make_ordered(3, {{2, 3}})));
    CHECK_FALSE(contains(host, make_ordered(4, {{1, 2}})));
}

TEST_CASE("agreement with the subset oracle, and every witness validates")
{
    std::mt19937_64 rng(11);
    const std::vector<Graph> lin_patterns{
        make_ordered(4, {{1, 3}, {1, 4}, {2, 4}}), make_ordered(3, {{1, 2}, {2, 3}}),
        make_ordered(5, {{1, 3}, {1, 5}, {2, 3}, {2, 4}}), make_ordered(4, {{1, 2}, {3, 4}}),
        make_ordered(4, {{1, 4}, {2, 3}})};
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        for (Mode mode : {Mode::linear, Mode::cyclic}) {
            Graph host = random_graph(mode, n, 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100, rng);
            for (const auto& base : lin_patterns) {
                Graph pat = base.with_mode(mode);
                auto all = find_all_embeddings(host, pat);
                CHECK(!all.empty() == naive_contains(host, pat));
                std::set<std::vector<int>> distinct;
                for (const auto& e : all) {
                    CHECK(is_valid_embedding(host, pat, e));
                    distinct.insert(e.map);
                }
                CHECK(distinct.size() == all.size());
            }
        }
    }
}

TEST_CASE("embedding counts match the subset oracle on small hosts")
{
    // The complete ordered graph K_6 holds C(6,3) copies of any 3-vertex pattern.
    std::vector<Edge> all;
    for (int x = 1; x <= 6; ++x)
        for (int y = x + 1; y <= 6; ++y)
            all.push_back({x, y});
    Graph k6(Mode::linear, 6, all);
    CHECK(find_all_embeddings(k6, make_ordered(3, {{1, 3}})).size() == 20);
    // Around the circle every 3-subset gives 3 rotations.
    CHECK(find_all_embeddings(k6.with_mode(Mode::cyclic), make_cg(3, {{1, 2}})).size() == 60);
}

TEST_CASE("reflection is opt-in and never duplicates")
{
    Graph host = make_cg(5, {{1, 2}, {2, 3}, {1, 4}});
    Graph pat = make_cg(4, {{1, 2}, {1, 3}, {3, 4}});
    SearchOptions plain;
    SearchOptions refl;
    refl.allow_reflection = true;
    auto a = find_all_embeddings(host, pat, plain);
    auto b = find_all_embeddings(host, pat, refl);
    CHECK(b.size() >= a.size());
    std::set<std::vector<int>> maps;
    for (const auto& e : b) {
        CHECK(is_valid_embedding(host, pat, e));
        maps.insert(e.map);
    }
    CHECK(maps.size() == b.size());
    CHECK(contains(host, reflect(pat), plain) == std::any_of(b.begin(), b.end(), [](auto& e) { return e.reflected; }));
}

TEST_CASE("metamorphic: mirror, rotation and pattern monotonicity")
{
    std::mt19937_64 rng(5);
    Graph pat = make_ordered(5, {{1, 3}, {1, 4}, {2, 3}, {2, 5}});
    std::vector<int> fewer{0, 1, 2};
    Graph sub = pat.edge_subgraph(fewer);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph host = random_graph(Mode::linear, n, 0.45, rng);
        bool has = contains(host, pat);
        CHECK(has == contains(mirror(host), mirror(pat)));
        if (has)
            CHECK(contains(host, sub));
        Graph ch = host.with_mode(Mode::cyclic);
        Graph cp = pat.with_mode(Mode::cyclic);
        bool cyc = contains(ch, cp);
        for (int r = 1; r < n; ++r)
            CHECK(contains(rotate(ch, r), cp) == cyc);
    }
}

TEST_CASE("pinned search through a given host edge")
{
    Graph host = pow2(8);
    auto adj = host.adjacency_matrix();
    Graph path = make_ordered(3, {{1, 2}, {2, 3}});
    auto e = find_embedding_through(Mode::linear, adj, path, Edge{4, 8});
    REQUIRE(e);
    CHECK(is_valid_embedding(host, path, *e));
    bool uses = false;
    for (const auto& pe : path.edges())
        uses = uses || make_edge((*e)(pe.u), (*e)(pe.v)) == Edge{4, 8};
    CHECK(uses);
    CHECK_FALSE(find_embedding_through(Mode::linear, adj, make_ordered(4, {{1, 3}, {1, 4}, {2, 4}}), Edge{1, 2}));
}

TEST_CASE("validator rejects broken maps")
{
    Graph host = make_ordered(4, {{1, 2}, {2, 3}, {3, 4}});
    Graph path = make_ordered(3, {{1, 2}, {2, 3}});
    CHECK(is_valid_embedding(host, path, {Mode::linear, false, {1, 2, 3}}));
    CHECK_FALSE(is_valid_embedding(host, path, {Mode::linear, false, {3, 2, 1}}));
    CHECK_FALSE(is_valid_embedding(host, path, {Mode::linear, false, {1, 2, 4}}));
    CHECK_FALSE(is_valid_embedding(host, path, {Mode::linear, false, {1, 1, 2}}));
}
