#include "ordtree/constructions.hpp"
#include "ordtree/io.hpp"
#include "ordtree/solver.hpp"
#include "ordtree/trees.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace ordtree;

namespace {

Graph complete(Mode mode, int n)
{
    std::vector<Edge> es;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            es.push_back({x, y});
    return Graph(mode, n, es);
}

std::vector<Graph> ztrees(Mode mode, int k)
{
    std::vector<Graph> out;
    for (const auto& t : enumerate_trees(k, mode, TreeFilter::chi2))
        if (mode == Mode::linear ? bool(z_decompose(t)) : bool(cg_z_decompose(t)))
            out.push_back(t);
    return out;
}

} // namespace

TEST_CASE("extremal number examples")
{
    Graph z = make_ordered(4, {{1, 3}, {2, 3}, {2, 4}});
    CHECK(extremal_number(5, z).value == 7);
    CHECK(extremal_number(4, z).value == 5);
    CHECK(extremal_number(3, make_ordered(2, {{1, 2}})).value == 0);
    auto p6 = extremal_number(6, pattern_p());
    CHECK(p6.value >= 11);
    CHECK(p6.value == 11);
}

TEST_CASE("witnesses are pattern-free and extremal")
{
    for (const auto& pat : {pattern_p(), make_ordered(4, {{1, 3}, {2, 3}, {2, 4}}), make_cg(4, {{1, 3}, {1, 4}, {2, 4}})})
        for (int n = 4; n <= 6; ++n) {
            auto r = extremal_number(n, pat);
            CHECK(static_cast<long long>(r.witness.size()) == r.value);
            CHECK_FALSE(contains(r.witness, pat));
        }
}

TEST_CASE("refusals and trivial queries")
{
    CHECK_THROWS_AS(extremal_number(9, pattern_p()), SolverRefusal);
    CHECK_THROWS_AS(extremal_number_naive(8, pattern_p()), SolverRefusal);
    CHECK_THROWS_AS(extremal_number(5, make_ordered(3, {})), InputError);
    CHECK(extremal_number(3, pattern_p()).value == 3);
}

TEST_CASE("frozen exact values")
{
    std::ifstream in(std::string(ORDTREE_GOLDEN_DIR) + "/extremal.json");
    REQUIRE(in);
    Json doc = Json::parse(in);
    int checked = 0;
    for (const auto& v : doc["values"]) {
        Json p = v["pattern"];
        p["mode"] = v["mode"];
        Graph pat = graph_from_json(p);
        CHECK(extremal_number(v["n"].get<int>(), pat).value == v["value"].get<long long>());
        ++checked;
    }
    CHECK(checked == 23);
}

TEST_CASE("value grows with n and shrinks when the pattern gains edges")
{
    Graph a = make_ordered(5, {{1, 3}, {1, 4}, {2, 3}, {2, 5}});
    std::vector<int> three{0, 1, 2};
    Graph sub = a.edge_subgraph(three);
    long long prev = -1;
    for (int n = 2; n <= 7; ++n) {
        long long v = extremal_number(n, a).value;
        CHECK(v >= prev);
        CHECK(extremal_number(n, sub).value <= v);
        prev = v;
    }
}

TEST_CASE("cg bound 2(k-1)n for small cg z-trees")
{
    for (int k = 2; k <= 3; ++k)
        for (const auto& z : ztrees(Mode::cyclic, k))
            for (int n = k + 1; n <= 7; ++n)
                CHECK(extremal_number(n, z).value <= 2LL * (k - 1) * n);
}

TEST_CASE("cg double star is at most its ordered version")
{
    // Hub 3-4 with both stars: linear z-tree with core {34}.
    Graph lin = make_ordered(6, {{1, 4}, {2, 4}, {3, 4}, {3, 5}, {3, 6}});
    Graph cyc = lin.with_mode(Mode::cyclic);
    for (int n = 6; n <= 7; ++n)
        CHECK(extremal_number(n, cyc).value <= extremal_number(n, lin).value);
}

TEST_CASE("embed_dense examples")
{
    Graph z = make_ordered(4, {{1, 3}, {2, 3}, {2, 4}});
    auto e = embed_dense(complete(Mode::linear, 5), z);
    REQUIRE(e);
    CHECK(is_valid_embedding(complete(Mode::linear, 5), z, *e));
    CHECK_FALSE(embed_dense(gstar(6, 1, 1, 1), z));

    Graph cz = make_cg(3, {{1, 2}, {1, 3}});
    REQUIRE(cg_z_decompose(cz));
    auto c = embed_dense(complete(Mode::cyclic, 6), cz);
    REQUIRE(c);
    CHECK(is_valid_embedding(complete(Mode::cyclic, 6), cz, *c));

    CHECK_THROWS_AS(embed_dense(complete(Mode::cyclic, 6), z), InputError);
    CHECK_THROWS_AS(embed_dense(complete(Mode::linear, 6), pattern_p()), NotApplicable);
}

TEST_CASE("embed_dense succeeds above the threshold for every small z-tree")
{
    std::mt19937_64 rng(99);
    for (Mode mode : {Mode::linear, Mode::cyclic})
        for (int k = 2; k <= 4; ++k)
            for (const auto& z : ztrees(mode, k)) {
                int n = mode == Mode::linear ? 9 : 4 * k + 2;
                long long need = dense_threshold(mode, n, k) + 1;
                Graph full = complete(mode, n);
                if (need > static_cast<long long>(full.size()))
                    continue;
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<Edge> es = full.edges();
                    for (std::size_t i = es.size(); i > 1; --i)
                        std::swap(es[i - 1], es[static_cast<std::size_t>(rng() % i)]);
                    es.resize(static_cast<std::size_t>(need));
                    Graph host(mode, n, es);
                    auto got = embed_dense(host, z);
                    REQUIRE(got);
                    CHECK(is_valid_embedding(host, z, *got));
                }
            }
}
