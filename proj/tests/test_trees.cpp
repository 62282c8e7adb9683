#include "ordtree/containment.hpp"
#include "ordtree/trees.hpp"

#include <doctest.h>

#include <set>

using namespace ordtree;

namespace {

std::vector<Graph> all_trees(int max_edges, Mode mode, TreeFilter filter)
{
    std::vector<Graph> out;
    for (int k = 1; k <= max_edges; ++k)
        for (auto& g : enumerate_trees(k, mode, filter))
            out.push_back(std::move(g));
    return out;
}

Graph cg_path(std::initializer_list<int> seq)
{
    std::vector<int> v(seq);
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        es.push_back(make_edge(v[i], v[i + 1]));
    return Graph(Mode::cyclic, static_cast<int>(v.size()), es);
}

} // namespace

TEST_CASE("increasing trees")
{
    CHECK(is_increasing_tree({{2, 3}}));
    CHECK(is_increasing_tree({{2, 3}, {2, 4}, {1, 4}}));
    CHECK_FALSE(is_increasing_tree({{1, 2}, {3, 4}}));
    CHECK_FALSE(is_increasing_tree({{1, 2}, {2, 3}}));
}

TEST_CASE("z_decompose examples")
{
    auto z = z_decompose(make_ordered(4, {{1, 3}, {2, 3}, {2, 4}}));
    REQUIRE(z);
    CHECK(z.decomposition->hub == Edge{2, 3});
    CHECK(z.decomposition->core == std::vector<Edge>{{2, 3}});
    CHECK(z.decomposition->s_j == std::vector<Edge>{{1, 3}});
    CHECK(z.decomposition->s_i == std::vector<Edge>{{2, 4}});
    CHECK(z.decomposition->a() == 1);
    CHECK(z.decomposition->b() == 1);
    CHECK(z.decomposition->c() == 1);

    auto y = z_decompose(make_ordered(4, {{1, 4}, {2, 3}, {2, 4}}));
    REQUIRE(y);
    CHECK(y.decomposition->hub == Edge{2, 4});
    CHECK(y.decomposition->core == std::vector<Edge>{{2, 3}, {2, 4}});
    CHECK(y.decomposition->s_j == std::vector<Edge>{{1, 4}});
    CHECK(y.decomposition->s_i.empty());
    CHECK(y.decomposition->is_increasing);

    auto single = z_decompose(make_ordered(2, {{1, 2}}));
    REQUIRE(single);
    CHECK(single.decomposition->hub == Edge{1, 2});

    auto p = z_decompose(pattern_p());
    CHECK_FALSE(p);
    CHECK(p.reason.find("absent") != std::string::npos);

    CHECK_THROWS_AS(z_decompose(make_ordered(4, {{1, 2}, {2, 3}, {3, 4}})), NotApplicable);
    CHECK_THROWS_AS(z_decompose(make_ordered(4, {{1, 3}, {2, 4}})), NotApplicable);
}

TEST_CASE("every decomposition passes the validator and reassembles the tree")
{
    for (const auto& t : all_trees(6, Mode::linear, TreeFilter::chi2)) {
        auto z = z_decompose(t);
        if (!z)
            continue;
        CHECK(is_valid_decomposition(t, *z.decomposition));
        CHECK(z.decomposition->k() == static_cast<int>(t.size()));
    }
}

TEST_CASE("longest increasing paths can propose several hubs")
{
    auto star = longest_increasing_path_hubs(make_ordered(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(star.size() >= 2);
    auto t = make_ordered(5, {{1, 3}, {2, 3}, {2, 4}, {2, 5}});
    auto hubs = longest_increasing_path_hubs(t);
    CHECK(std::find(hubs.begin(), hubs.end(), Edge{2, 3}) != hubs.end());
    CHECK(std::find(hubs.begin(), hubs.end(), Edge{2, 4}) != hubs.end());
    CHECK(decompose_at(t, Edge{2, 3}));
    CHECK_FALSE(decompose_at(t, Edge{2, 4}));
    CHECK(z_decompose(t).decomposition->hub == Edge{2, 3});

    // Among all z-trees with <= 5 edges some candidate is always valid.
    for (const auto& g : all_trees(5, Mode::linear, TreeFilter::chi2)) {
        if (!z_decompose(g))
            continue;
        bool any = false;
        for (Edge h : longest_increasing_path_hubs(g))
            any = any || decompose_at(g, h).has_value();
        CHECK(any);
    }
}

TEST_CASE("z-trees are closed under mirror and increasing trees never cross")
{
    for (const auto& t : all_trees(5, Mode::linear, TreeFilter::chi2)) {
        CHECK(bool(z_decompose(t)) == bool(z_decompose(mirror(t))));
        if (is_increasing_tree(t.edges()))
            for (const auto& e : t.edges())
                for (const auto& f : t.edges())
                    CHECK_FALSE(crosses(e, f));
    }
}

TEST_CASE("obstruction catalog")
{
    const auto& cat = default_catalog();
    REQUIRE(!cat.entries.empty());
    CHECK(cat.entries.front().pattern == pattern_p());
    CHECK(cat.entries.front().provenance == Provenance::pinned);

    auto four = derive_obstructions(4);
    std::vector<Graph> pats;
    for (const auto& e : four.entries)
        pats.push_back(e.pattern);
    std::vector<Graph> expected{pattern_p(), make_ordered(5, {{1, 3}, {1, 4}, {2, 3}, {2, 5}}),
                                make_ordered(5, {{1, 4}, {2, 5}, {3, 4}, {3, 5}}),
                                make_ordered(5, {{1, 3}, {1, 5}, {2, 3}, {2, 4}}),
                                make_ordered(5, {{1, 5}, {2, 4}, {3, 4}, {3, 5}})};
    CHECK(pats.size() == 5);
    CHECK(std::is_permutation(pats.begin(), pats.end(), expected.begin(), expected.end()));

    for (const auto& e : cat.entries) {
        CHECK(e.pattern.is_tree());
        CHECK(chi_interval(e.pattern).value == 2);
        CHECK_FALSE(z_decompose(e.pattern));
        bool crossing = false;
        for (const auto& x : e.pattern.edges())
            for (const auto& y : e.pattern.edges())
                crossing = crossing || crosses(x, y);
        CHECK(crossing);
        Graph m = mirror(e.pattern);
        CHECK(std::any_of(cat.entries.begin(), cat.entries.end(), [&](auto& o) { return o.pattern == m; }));
    }
    CHECK(derive_obstructions(5).entries.size() == cat.entries.size());
    CHECK_THROWS_AS(derive_obstructions(2), InputError);
}

TEST_CASE("cg z-trees")
{
    Graph ds = make_cg(6, {{3, 4}, {3, 6}, {3, 5}, {2, 4}, {1, 4}});
    auto z = cg_z_decompose(ds);
    REQUIRE(z);
    CHECK(z.rotation == 0);
    CHECK(z.decomposition->a() == 1);

    Graph p2 = make_cg(6, {{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}});
    CHECK_FALSE(cg_z_decompose(p2));
    CHECK(cg_z_decompose(cg_path({3, 2, 4, 1, 5})));

    for (int n = 3; n <= 7; ++n)
        for (int r = 0; r < n; ++r)
            for (int l = 1; l <= n; ++l) {
                // cg_original_label inverts the relabelling used by cg_linearize.
                int rotated = (l - 1 + r) % n + 1;
                CHECK(cg_original_label(n, r, n + 1 - rotated) == l);
            }
    CHECK_THROWS_AS(cg_z_decompose(make_cg(4, {{1, 2}, {2, 3}, {3, 4}})), NotApplicable);
}

TEST_CASE("crossing four-edge paths")
{
    auto w = detect_crossing_path4(cg_path({3, 1, 4, 2, 5}));
    REQUIRE(w);
    CHECK_FALSE(detect_crossing_path4(cg_path({3, 2, 4, 1, 5})));
    CHECK_FALSE(detect_crossing_path4(make_cg(4, {{1, 2}, {1, 3}, {1, 4}})));
}

TEST_CASE("P family")
{
    Graph p2 = make_cg(6, {{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}});
    auto w = detect_P_family(p2);
    REQUIRE(w);
    CHECK(w->kind == 2);
    CHECK(is_P_family_pair(6, {4, 2, 5, 3}, {6, 2, 5, 1}));
    CHECK_FALSE(is_P_family_pair(6, {4, 2, 5, 3}, {4, 2, 5, 3}));

    CHECK_FALSE(detect_P_family(make_cg(6, {{3, 4}, {3, 6}, {3, 5}, {2, 4}, {1, 4}})));
    for (const auto& t : all_trees(4, Mode::cyclic, TreeFilter::all))
        CHECK_FALSE(detect_P_family(t));
}

TEST_CASE("zigzag and heavy edges")
{
    CHECK(is_zigzag(cg_path({3, 2, 4, 1, 5})));
    CHECK_FALSE(is_zigzag(cg_path({1, 2, 3, 4})));
    CHECK_FALSE(is_zigzag(cg_path({3, 1, 4, 2, 5})));
    CHECK_THROWS_AS(is_zigzag(make_cg(4, {{1, 2}, {1, 3}, {1, 4}})), InputError);

    Graph p2 = make_cg(6, {{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}});
    CHECK(is_heavy_edge(p2, Edge{2, 5}));
    CHECK_FALSE(is_heavy_edge(cg_path({3, 2, 4, 1, 5}), Edge{2, 4}));
}

TEST_CASE("classification")
{
    auto lin = classify_tree(make_ordered(4, {{1, 3}, {2, 3}, {2, 4}}));
    CHECK(lin.kind == VerdictKind::linear);
    CHECK(lin.formula(10) == 17);
    CHECK(lin.decomposition);

    auto p = classify_tree(pattern_p());
    CHECK(p.kind == VerdictKind::nonlinear);
    CHECK(p.growth == Growth::n_log_n);
    REQUIRE(p.witness_pattern);
    CHECK(*p.witness_pattern == pattern_p());

    auto p2 = classify_tree(make_cg(6, {{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}}));
    CHECK(p2.kind == VerdictKind::nonlinear);
    CHECK(p2.growth == Growth::n_log_log_n);

    auto zig = classify_tree(cg_path({3, 2, 4, 1, 5}));
    CHECK(zig.kind == VerdictKind::linear);
    CHECK(zig.formula(10) == 60);

    auto dense = classify_tree(make_ordered(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(dense.kind == VerdictKind::nonlinear);
    CHECK(dense.growth == Growth::quadratic);

    CHECK(classify_tree(make_ordered(4, {{1, 2}, {3, 4}})).kind == VerdictKind::not_applicable);
}

TEST_CASE("classification never trips the internal agreement check")
{
    for (Mode mode : {Mode::linear, Mode::cyclic})
        for (const auto& t : all_trees(5, mode, TreeFilter::all))
            CHECK_NOTHROW(classify_tree(t));
}

TEST_CASE("tree enumeration")
{
    CHECK(enumerate_trees(1, Mode::linear, TreeFilter::all).size() == 1);
    CHECK(enumerate_trees(3, Mode::linear, TreeFilter::all).size() == 16);
    CHECK(enumerate_trees(3, Mode::linear, TreeFilter::chi2).size() == 6);
    for (int k = 1; k <= 6; ++k) {
        auto trees = enumerate_trees(k, Mode::linear, TreeFilter::all);
        long long cayley = 1;
        for (int i = 0; i < k - 1; ++i)
            cayley *= k + 1;
        CHECK(static_cast<long long>(trees.size()) == cayley);
        std::set<std::vector<Edge>> distinct;
        for (const auto& t : trees) {
            CHECK(t.is_tree());
            distinct.insert(t.edges());
        }
        CHECK(distinct.size() == trees.size());
    }
    CHECK_THROWS_AS(enumerate_trees(0, Mode::linear, TreeFilter::all), InputError);
    CHECK_THROWS_AS(enumerate_trees(7, Mode::linear, TreeFilter::all), InputError);
}
