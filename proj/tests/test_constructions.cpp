#include "ordtree/constructions.hpp"
#include "ordtree/containment.hpp"
#include "ordtree/trees.hpp"

#include <doctest.h>

using namespace ordtree;

TEST_CASE("pow2")
{
    Graph g = pow2(8);
    CHECK(g.size() == 17);
    CHECK(pow2_edge_count(8) == 17);
    CHECK_FALSE(contains(g, pattern_p()));
    CHECK_FALSE(contains(pow2(6), pattern_p()));
    CHECK(pow2(6).size() == 11);
    CHECK_THROWS_AS(pow2(1), InputError);
}

TEST_CASE("fh recursions")
{
    CHECK(fh_q(4).edges() == std::vector<Edge>{{1, 5}, {2, 5}, {2, 6}, {3, 5}, {3, 7}, {4, 6}, {4, 7}, {4, 8}});
    CHECK(fh_r(2).edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}});
    CHECK(fh_q(1).edges() == std::vector<Edge>{{1, 2}});
    for (int s = 1; s <= 64; s *= 2) {
        CHECK(static_cast<long long>(fh_q(s).size()) == fh_edge_count(s));
        CHECK(static_cast<long long>(fh_r(s).size()) == fh_edge_count(s));
        CHECK(mirror(fh_q(s)) == fh_q(s));
        if (s >= 2)
            CHECK_FALSE(mirror(fh_r(s)) == fh_r(s));
    }
    CHECK(fh_edge_count(4) == 8);
    CHECK_THROWS_AS(fh_q(3), InputError);
    CHECK_THROWS_AS(construct("fh_r", {7}), InputError);
    CHECK(construct("fh_r", {8}) == fh_r(4));
}

TEST_CASE("gstar")
{
    Graph g = gstar(6, 1, 1, 1);
    CHECK(g.size() == 9);
    CHECK(gstar_edge_count(6, 1, 1, 1) == 9);
    CHECK_THROWS_AS(gstar(3, 1, 1, 1), InputError);
    CHECK_THROWS_AS(gstar(6, 0, 1, 1), InputError);
}

TEST_CASE("gstar avoids every z-tree with its parameters")
{
    for (int k = 1; k <= 4; ++k)
        for (const auto& z : enumerate_trees(k, Mode::linear, TreeFilter::chi2)) {
            auto d = z_decompose(z);
            if (!d)
                continue;
            for (int n = k + 1; n <= 10; ++n)
                CHECK_FALSE(contains(gstar(n, d.decomposition->a(), d.decomposition->b(), d.decomposition->c()), z));
        }
}

TEST_CASE("F_n")
{
    Graph g = f_n(16);
    CHECK(g.size() == 12);
    auto with_color = [&](int c) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g.colors()[i] == c)
                es.push_back(g.edges()[i]);
        return es;
    };
    CHECK(with_color(1) == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    CHECK(with_color(2) == std::vector<Edge>{{1, 4}, {3, 6}, {5, 8}, {7, 10}});
    CHECK(with_color(3) == std::vector<Edge>{{1, 8}, {3, 10}, {5, 12}, {7, 14}});
    CHECK(f_n(8).size() == 4);
    for (int n : {8, 16, 32, 64}) {
        CHECK(static_cast<long long>(f_n(n).size()) == f_n_edge_count(n));
        CHECK(has_parity_ends(f_n(n)));
        CHECK_FALSE(find_heavy_path(f_n(n)));
    }
    CHECK(find_heavy_path(make_cg(4, {{1, 3}, {1, 4}, {2, 4}})));
    CHECK_THROWS_AS(f_n(12), InputError);
    CHECK_THROWS_AS(f_n(4), InputError);
}

TEST_CASE("F_{n,0}")
{
    Graph g = f_n0(8);
    CHECK(g.size() == 16);
    CHECK_FALSE(contains(g, make_cg(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_THROWS_AS(f_n0(7), InputError);
}

TEST_CASE("construct dispatcher")
{
    CHECK(construct("pow2", {8}).size() == 17);
    CHECK(construct("gstar", {6, 1, 1, 1}) == gstar(6, 1, 1, 1));
    CHECK_THROWS_AS(construct("nope", {8}), InputError);
}
