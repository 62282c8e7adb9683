#include "ordtree/acceptance.hpp"

#include "ordtree/constructions.hpp"
#include "ordtree/containment.hpp"
#include "ordtree/io.hpp"
#include "ordtree/solver.hpp"
#include "ordtree/trees.hpp"
#include "ordtree/walks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#ifndef ORDTREE_GOLDEN_DIR
#define ORDTREE_GOLDEN_DIR "golden"
#endif

namespace ordtree {

std::string golden_dir()
{
    if (const char* env = std::getenv("ORDTREE_GOLDEN_DIR"); env && *env)
        return env;
    return ORDTREE_GOLDEN_DIR;
}

namespace {

// Counts checked cases and keeps the first few counterexamples.
class Tally {
public:
    void ok() { ++checked_; }
    void fail(const std::string& what)
    {
        ++checked_;
        ++failed_;
        if (examples_.size() < 5)
            examples_.push_back(what);
    }
    void expect(bool cond, const std::string& what)
    {
        if (cond)
            ok();
        else
            fail(what);
    }
    bool passed() const { return failed_ == 0 && checked_ > 0; }
    std::string summary(const std::string& extra = {}) const
    {
        std::ostringstream out;
        out << checked_ << " cases, " << failed_ << " failed";
        if (!extra.empty())
            out << "; " << extra;
        for (const auto& e : examples_)
            out << "\n      " << e;
        return out.str();
    }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> examples_;
};

Json read_golden(const std::string& name)
{
    std::ifstream in(golden_dir() + "/" + name);
    if (!in)
        throw InputError("missing golden file " + golden_dir() + "/" + name);
    return Json::parse(in);
}

Graph golden_pattern(const Json& j, Mode mode)
{
    Json doc = j;
    doc["mode"] = std::string(to_string(mode));
    return graph_from_json(doc);
}

std::vector<Graph> trees_upto(int max_edges, Mode mode, TreeFilter filter)
{
    std::vector<Graph> out;
    for (int k = 1; k <= max_edges; ++k)
        for_each_tree(k, mode, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> ordered_ztrees(int k)
{
    std::vector<Graph> out;
    for_each_tree(k, Mode::linear, TreeFilter::chi2, [&](const Graph& g) {
        if (z_decompose(g))
            out.push_back(g);
    });
    return out;
}

std::vector<Graph> cg_ztrees(int k)
{
    std::vector<Graph> out;
    for_each_tree(k, Mode::cyclic, TreeFilter::chi2, [&](const Graph& g) {
        if (cg_z_decompose(g))
            out.push_back(g);
    });
    return out;
}

// Runs body(i) for i in [0, count) on a few threads; body must be thread safe.
template <class Body>
void parallel_for(std::size_t count, Body body)
{
    unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

CheckResult check_formula(std::uint64_t)
{
    Tally tally;
    struct Case {
        Graph tree;
        int n;
    };
    std::vector<Case> cases;
    for (int k = 2; k <= 4; ++k)
        for (const auto& t : ordered_ztrees(k))
            for (int n = k + 1; n <= 7; ++n)
                cases.push_back({t, n});
    std::vector<long long> got(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) { got[i] = extremal_number(cases[i].n, cases[i].tree).value; });
    for (std::size_t i = 0; i < cases.size(); ++i) {
        long long k = static_cast<long long>(cases[i].tree.size());
        long long want = (k - 1) * cases[i].n - k * (k - 1) / 2;
        tally.expect(got[i] == want, to_string(cases[i].tree) + " n=" + std::to_string(cases[i].n) + ": solver "
                                         + std::to_string(got[i]) + ", formula " + std::to_string(want));
    }
    return {1, {}, tally.passed(), tally.summary(), 0};
}

CheckResult check_obstruction_equivalence(std::uint64_t)
{
    Tally tally;
    const auto& catalog = default_catalog();
    Json golden = read_golden("catalog.json");
    std::vector<Graph> frozen;
    for (const auto& p : golden["patterns"])
        frozen.push_back(golden_pattern(p, Mode::linear));
    std::vector<Graph> live;
    for (const auto& e : catalog.entries)
        live.push_back(e.pattern);
    tally.expect(live == frozen, "derived catalog differs from the frozen one");
    for (const auto& t : trees_upto(5, Mode::linear, TreeFilter::chi2)) {
        bool z = static_cast<bool>(z_decompose(t));
        bool free = !catalog.first_match(t).has_value();
        tally.expect(z == free, to_string(t) + (z ? " is a z-tree but contains an obstruction"
                                                  : " is not a z-tree yet avoids every obstruction"));
    }
    return {2, {}, tally.passed(), tally.summary(std::to_string(live.size()) + " catalog patterns"), 0};
}

CheckResult check_structure_equivalence(std::uint64_t)
{
    Tally tally;
    std::size_t linear = 0;
    for (const auto& t : trees_upto(5, Mode::cyclic, TreeFilter::chi2)) {
        bool z = static_cast<bool>(cg_z_decompose(t));
        bool clean = !detect_crossing_path4(t) && !detect_P_family(t);
        linear += z ? 1 : 0;
        tally.expect(z == clean, to_string(t) + (z ? " is a cg z-tree but has a forbidden configuration"
                                                   : " is not a cg z-tree yet has no forbidden configuration"));
    }
    return {3, {}, tally.passed(), tally.summary(std::to_string(linear) + " cg z-trees"), 0};
}

CheckResult check_construction_avoidance(std::uint64_t)
{
    Tally tally;
    const Graph p = pattern_p();
    for (int n = 2; n <= 64; ++n)
        tally.expect(!contains(pow2(n), p), "pow2(" + std::to_string(n) + ") contains P");

    Json golden = read_golden("fh_containment.json");
    std::vector<Graph> pats;
    for (const auto& j : golden["patterns"])
        pats.push_back(golden_pattern(j, Mode::linear));
    // The four 4-edge obstructions, as two mirror pairs.
    std::vector<Graph> four;
    for (const auto& e : default_catalog().entries)
        if (e.pattern.size() == 4)
            four.push_back(e.pattern);
    tally.expect(four.size() == 4 && std::is_permutation(four.begin(), four.end(), pats.begin(), pats.end()),
                 "frozen fh patterns are not the 4-edge obstructions");
    auto mirror_index = [&](std::size_t i) {
        for (std::size_t j = 0; j < pats.size(); ++j)
            if (pats[j] == mirror(pats[i]))
                return j;
        return pats.size();
    };

    std::map<std::string, std::vector<std::vector<bool>>> seen;
    std::vector<int> sizes;
    for (int vertices = 4; vertices <= 64; vertices *= 2) {
        sizes.push_back(vertices);
        for (const char* kind : {"q", "r"}) {
            Graph g = construct(std::string("fh_") + kind, {vertices});
            std::vector<bool> row;
            for (const auto& pat : pats)
                row.push_back(contains(g, pat));
            auto frozen = golden["contains"][kind][std::to_string(vertices)].get<std::vector<bool>>();
            tally.expect(row == frozen, std::string("fh_") + kind + " on " + std::to_string(vertices)
                                            + " vertices disagrees with the frozen containment table");
            seen[kind].push_back(row);
        }
    }
    // Structural reading: fh_q avoids a whole mirror pair X and contains a
    // member of the other pair Y; fh_r avoids one pattern of Y and contains its mirror.
    bool found = false;
    for (std::size_t x = 0; x < pats.size() && !found; ++x) {
        std::size_t xm = mirror_index(x);
        std::vector<std::size_t> other;
        for (std::size_t y = 0; y < pats.size(); ++y)
            if (y != x && y != xm)
                other.push_back(y);
        if (other.size() != 2)
            continue;
        bool q_ok = true;
        for (std::size_t s = 0; s < sizes.size(); ++s) {
            const auto& row = seen["q"][s];
            q_ok = q_ok && !row[x] && !row[xm];
            if (sizes[s] >= 5)
                q_ok = q_ok && (row[other[0]] || row[other[1]]);
        }
        for (auto [avoid, hit] : {std::pair{other[0], other[1]}, std::pair{other[1], other[0]}}) {
            bool r_ok = true;
            for (std::size_t s = 0; s < sizes.size(); ++s) {
                const auto& row = seen["r"][s];
                r_ok = r_ok && !row[avoid];
                if (sizes[s] >= 5)
                    r_ok = r_ok && row[hit];
            }
            if (q_ok && r_ok)
                found = true;
        }
    }
    tally.expect(found, "no assignment of mirror pairs to fh_q / fh_r fits the containment table");
    return {4, {}, tally.passed(), tally.summary(), 0};
}

CheckResult check_edge_counts(std::uint64_t)
{
    Tally tally;
    for (int n = 2; n <= 64; ++n) {
        long long want = 0;
        for (long long h = 1; h < n; h *= 2)
            want += n - h;
        tally.expect(static_cast<long long>(pow2(n).size()) == want, "pow2(" + std::to_string(n) + ")");
    }
    for (int s = 1; s <= 32; s *= 2) {
        long long want = static_cast<long long>(std::llround(0.5 * s * std::log2(s) + s));
        for (auto g : {fh_q(s), fh_r(s)})
            tally.expect(static_cast<long long>(g.size()) == want && fh_edge_count(s) == want,
                         "fh stage " + std::to_string(s));
    }
    for (int a = 1; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c)
                for (int n = a + b + c + 1; n <= 20; ++n) {
                    long long k = a + b + c;
                    tally.expect(static_cast<long long>(gstar(n, a, b, c).size()) == (k - 1) * n - k * (k - 1) / 2,
                                 "gstar(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b)
                                     + "," + std::to_string(c) + ")");
                }
    for (int kappa = 3; kappa <= 6; ++kappa) {
        int n = 1 << kappa;
        tally.expect(static_cast<long long>(f_n(n).size()) == (kappa - 1) * n / 4, "f_n(" + std::to_string(n) + ")");
    }
    return {5, {}, tally.passed(), tally.summary(), 0};
}

CheckResult check_f_n_properties(std::uint64_t)
{
    Tally tally;
    for (int n : {8, 16, 32, 64}) {
        Graph g = f_n(n);
        tally.expect(has_parity_ends(g), "f_n(" + std::to_string(n) + ") has a wrong-parity end");
        tally.expect(!find_heavy_path(g), "f_n(" + std::to_string(n) + ") has a heavy path");
    }
    const Graph l = make_cg(4, {{1, 2}, {2, 3}, {3, 4}});
    for (int n = 2; n <= 64; n += 2)
        tally.expect(!contains(f_n0(n), l), "F_{" + std::to_string(n) + ",0} contains L");
    return {6, {}, tally.passed(), tally.summary(), 0};
}

CheckResult check_cla3(std::uint64_t seed)
{
    Tally tally;
    const ColoredBipartite f64(f_n(64));
    std::vector<std::pair<std::string, Graph>> hosts;
    hosts.emplace_back("F_{64,0}", f_n0(64));
    hosts.emplace_back("fast-free", extract_walk_free(f64, WalkKind::fast, Side::A, seed).subgraph);
    hosts.emplace_back("slow-free(A)", extract_walk_free(f64, WalkKind::slow, Side::A, seed).subgraph);
    hosts.emplace_back("slow-free(B)", extract_walk_free(f64, WalkKind::slow, Side::B, seed).subgraph);
    for (auto& [name, h] : hosts)
        h = h.with_mode(Mode::cyclic);

    std::vector<int> seq{1, 2, 3, 4, 5};
    int types = 0;
    int zigzags = 0;
    do {
        ++types;
        std::vector<Edge> es;
        for (int t = 0; t < 4; ++t)
            es.push_back(make_edge(seq[static_cast<std::size_t>(t)], seq[static_cast<std::size_t>(t + 1)]));
        Graph path(Mode::cyclic, 5, es);
        std::string label = "path";
        for (int v : seq)
            label += "-" + std::to_string(v);
        std::vector<std::string> hit;
        for (const auto& [name, h] : hosts)
            if (contains(h, path))
                hit.push_back(name);
        if (is_zigzag(path)) {
            ++zigzags;
            tally.expect(!hit.empty(), label + " (zigzag) embeds in no host");
        } else {
            tally.expect(hit.size() < hosts.size(), label + " embeds in every host");
        }
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
    return {7, {}, tally.passed() && types == 24,
            tally.summary(std::to_string(types) + " types, " + std::to_string(zigzags) + " zigzag"), 0};
}

// Every 4-edge walk with distinct consecutive edges, checked against the color rule.
bool has_walk_bruteforce(const Graph& g, WalkKind kind, Side start)
{
    auto col = [&](int x, int y) { return g.color_of(make_edge(x, y)); };
    for (int v0 = 1; v0 <= g.n(); ++v0)
        for (int v1 : g.neighbors(v0))
            for (int v2 : g.neighbors(v1))
                for (int v3 : g.neighbors(v2))
                    for (int v4 : g.neighbors(v3)) {
                        if (v2 == v0 || v3 == v1 || v4 == v2)
                            continue;
                        int c1 = col(v0, v1), c2 = col(v1, v2), c3 = col(v2, v3), c4 = col(v3, v4);
                        bool ok = c2 < c3 && c3 < c4;
                        if (kind == WalkKind::fast)
                            ok = ok && c4 <= c1;
                        else
                            ok = ok && c2 < c1 && c1 <= c4 && ColoredBipartite::side_of(v0) == start;
                        if (ok)
                            return true;
                    }
    return false;
}

Graph random_colored_bipartite(std::mt19937_64& rng)
{
    int n = 4 + static_cast<int>(rng() % 7);
    int d = 1 + static_cast<int>(rng() % 5);
    std::size_t target = 1 + rng() % 14;
    std::vector<Edge> es;
    std::vector<int> cs;
    for (int tries = 0; tries < 200 && es.size() < target; ++tries) {
        int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        int y = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        if (x % 2 == y % 2)
            continue;
        Edge e = make_edge(x, y);
        if (std::find(es.begin(), es.end(), e) != es.end())
            continue;
        int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
        bool clash = false;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (cs[i] == c && (es[i].touches(e.u) || es[i].touches(e.v)))
                clash = true;
        if (clash)
            continue;
        es.push_back(e);
        cs.push_back(c);
    }
    return Graph(Mode::cyclic, n, es, cs);
}

CheckResult check_walks(std::uint64_t seed)
{
    Tally tally;
    const std::vector<std::pair<WalkKind, Side>> kinds{
        {WalkKind::fast, Side::A}, {WalkKind::slow, Side::A}, {WalkKind::slow, Side::B}};
    std::ostringstream sizes;
    for (int n : {8, 16, 32, 64}) {
        ColoredBipartite g(f_n(n));
        std::size_t largest_class = 0;
        for (int c = 1; c <= g.colors(); ++c)
            largest_class = std::max<std::size_t>(
                largest_class, std::count(g.graph().colors().begin(), g.graph().colors().end(), c));
        for (auto [kind, start] : kinds) {
            auto x = extract_walk_free(g, kind, start, seed);
            std::string tag = "f_n(" + std::to_string(n) + ") " + std::string(to_string(kind))
                            + (kind == WalkKind::slow ? std::string("/") + std::string(to_string(start)) : "");
            tally.expect(!find_forbidden_walk(ColoredBipartite(x.subgraph), kind, start), tag + " not walk-free");
            tally.expect(!has_walk_bruteforce(x.subgraph, kind, start), tag + " not walk-free (brute force)");
            tally.expect(static_cast<long long>(x.achieved) >= walk_free_bound(g.colors(), g.graph().size()),
                         tag + " below the size bound");
            tally.expect(x.achieved >= largest_class, tag + " smaller than a color class");
            if (n == 64)
                sizes << tag << "=" << x.achieved << " ";
        }
    }

    std::vector<Graph> corpus;
    Graph f16 = f_n(16);
    for (int mask = 0; mask < (1 << 12); ++mask) {
        std::vector<int> keep;
        for (int i = 0; i < 12; ++i)
            if (mask >> i & 1)
                keep.push_back(i);
        corpus.push_back(f16.edge_subgraph(keep));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 2000; ++i)
        corpus.push_back(random_colored_bipartite(rng));
    for (const auto& g : corpus)
        for (auto [kind, start] : kinds) {
            bool fast_says = find_forbidden_walk(ColoredBipartite(g), kind, start).has_value();
            tally.expect(fast_says == has_walk_bruteforce(g, kind, start),
                         "detector disagrees with brute force on " + to_string(g));
        }
    return {8, {}, tally.passed(), tally.summary("corpus " + std::to_string(corpus.size()) + "; " + sizes.str()), 0};
}

Graph random_host(Mode mode, int n, long long above, std::mt19937_64& rng)
{
    std::vector<Edge> all;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            all.push_back({x, y});
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[static_cast<std::size_t>(rng() % i)]);
    std::size_t lo = static_cast<std::size_t>(above + 1);
    std::size_t m = lo + rng() % (all.size() - lo + 1);
    all.resize(m);
    return Graph(mode, n, all);
}

CheckResult check_dense_embedding(std::uint64_t seed)
{
    Tally tally;
    struct Cell {
        Mode mode;
        int k;
        int n;
    };
    std::vector<Cell> cells;
    for (int k : {3, 4})
        for (int n : {6, 7, 8})
            cells.push_back({Mode::linear, k, n});
    for (int n : {6, 7, 8})
        cells.push_back({Mode::cyclic, 2, n});
    for (int n : {10, 11, 12})
        cells.push_back({Mode::cyclic, 3, n});

    std::vector<std::vector<Graph>> ztrees(5);
    std::vector<std::vector<Graph>> cg(4);
    for (int k = 2; k <= 4; ++k)
        ztrees[static_cast<std::size_t>(k)] = ordered_ztrees(k);
    for (int k = 2; k <= 3; ++k)
        cg[static_cast<std::size_t>(k)] = cg_ztrees(k);

    std::mutex mu;
    parallel_for(cells.size(), [&](std::size_t ci) {
        const Cell cell = cells[ci];
        std::mt19937_64 rng(seed * 1000003ULL + ci);
        const auto& pool = cell.mode == Mode::linear ? ztrees[static_cast<std::size_t>(cell.k)]
                                                     : cg[static_cast<std::size_t>(cell.k)];
        long long threshold = dense_threshold(cell.mode, cell.n, cell.k);
        Tally local;
        for (int trial = 0; trial < 1000; ++trial) {
            const Graph& z = pool[static_cast<std::size_t>(rng() % pool.size())];
            Graph host = random_host(cell.mode, cell.n, threshold, rng);
            auto e = embed_dense(host, z);
            local.expect(e && is_valid_embedding(host, z, *e),
                         "no embedding of " + to_string(z) + " in " + to_string(host));
        }
        std::lock_guard lock(mu);
        if (local.passed())
            for (int i = 0; i < 1000; ++i)
                tally.ok();
        else
            tally.fail(std::string(to_string(cell.mode)) + " k=" + std::to_string(cell.k) + " n="
                       + std::to_string(cell.n) + ": " + local.summary());
    });

    for (int k = 1; k <= 4; ++k)
        for (const auto& z : ordered_ztrees(k)) {
            auto d = *z_decompose(z).decomposition;
            for (int n = k + 1; n <= 12; ++n) {
                Graph g = gstar(n, d.a(), d.b(), d.c());
                tally.expect(!embed_dense(g, z), "embedded " + to_string(z) + " in gstar n=" + std::to_string(n));
            }
        }
    return {9, {}, tally.passed(), tally.summary(), 0};
}

CheckResult check_solver_oracle(std::uint64_t)
{
    Tally tally;
    std::vector<Graph> patterns;
    for (const auto& e : default_catalog().entries)
        patterns.push_back(e.pattern);
    for (int k = 1; k <= 3; ++k) {
        for (const auto& z : ordered_ztrees(k))
            patterns.push_back(z);
        for (const auto& z : cg_ztrees(k))
            patterns.push_back(z);
    }
    struct Case {
        std::size_t pattern;
        int n;
    };
    std::vector<Case> cases;
    for (std::size_t p = 0; p < patterns.size(); ++p)
        for (int n = 2; n <= 5; ++n)
            cases.push_back({p, n});
    std::vector<std::pair<long long, long long>> got(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        const Graph& p = patterns[cases[i].pattern];
        got[i] = {extremal_number(cases[i].n, p).value, extremal_number_naive(cases[i].n, p).value};
    });
    for (std::size_t i = 0; i < cases.size(); ++i)
        tally.expect(got[i].first == got[i].second,
                     to_string(patterns[cases[i].pattern]) + " n=" + std::to_string(cases[i].n) + ": "
                         + std::to_string(got[i].first) + " vs naive " + std::to_string(got[i].second));
    return {10, {}, tally.passed(), tally.summary(std::to_string(patterns.size()) + " patterns"), 0};
}

CheckResult check_metamorphic(std::uint64_t)
{
    Tally tally;
    auto ordered = trees_upto(5, Mode::linear, TreeFilter::all);
    auto cyclic = trees_upto(5, Mode::cyclic, TreeFilter::all);

    std::vector<Graph> lin_patterns;
    for (const auto& e : default_catalog().entries)
        lin_patterns.push_back(e.pattern);
    for (const auto& t : trees_upto(2, Mode::linear, TreeFilter::all))
        lin_patterns.push_back(t);
    std::vector<Graph> cg_patterns = trees_upto(3, Mode::cyclic, TreeFilter::all);

    for (const auto& t : ordered) {
        Graph m = mirror(t);
        tally.expect(chi_interval(t).value == chi_interval(m).value, "chi_i mirror " + to_string(t));
        tally.expect(classify_tree(t).kind == classify_tree(m).kind, "verdict mirror " + to_string(t));
        for (const auto& p : lin_patterns)
            tally.expect(contains(t, p) == contains(m, mirror(p)), "containment mirror " + to_string(t));
    }
    for (const auto& t : cyclic) {
        int chi = chi_cyclic(t).value;
        auto kind = classify_tree(t).kind;
        std::vector<bool> base;
        for (const auto& p : cg_patterns)
            base.push_back(contains(t, p));
        for (int r = 1; r < t.n(); ++r) {
            Graph g = rotate(t, r);
            tally.expect(chi_cyclic(g).value == chi, "chi_c rotation " + to_string(t));
            tally.expect(classify_tree(g).kind == kind, "verdict rotation " + to_string(t));
            for (std::size_t i = 0; i < cg_patterns.size(); ++i)
                tally.expect(contains(g, cg_patterns[i]) == base[i], "containment rotation " + to_string(t));
        }
        Graph f = reflect(t);
        tally.expect(chi_cyclic(f).value == chi, "chi_c reflection " + to_string(t));
        tally.expect(classify_tree(f).kind == kind, "verdict reflection " + to_string(t));
    }
    return {11, {}, tally.passed(), tally.summary(), 0};
}

} // namespace

const std::vector<CheckSpec>& acceptance_checks()
{
    static const std::vector<CheckSpec> checks{
        {1, "formula reproduction", check_formula},
        {2, "obstruction equivalence (ordered)", check_obstruction_equivalence},
        {3, "structure equivalence (cg)", check_structure_equivalence},
        {4, "construction avoidance", check_construction_avoidance},
        {5, "edge-count identities", check_edge_counts},
        {6, "F_n properties", check_f_n_properties},
        {7, "four-edge cg paths vs walk-free hosts", check_cla3},
        {8, "walk machinery", check_walks},
        {9, "dense embedding guarantee", check_dense_embedding},
        {10, "solver oracle equivalence", check_solver_oracle},
        {11, "metamorphic suite", check_metamorphic},
    };
    return checks;
}

std::vector<CheckResult> run_acceptance(const std::vector<int>& ids, unsigned threads, std::uint64_t seed)
{
    std::vector<const CheckSpec*> selected;
    for (const auto& c : acceptance_checks())
        if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end())
            selected.push_back(&c);
    if (threads == 0) {
        if (const char* env = std::getenv("ORDTREE_THREADS"); env && *env)
            threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
        else
            threads = std::max(1U, std::thread::hardware_concurrency());
    }
    std::vector<CheckResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = selected[i]->run(seed);
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.id = selected[i]->id;
            r.name = selected[i]->name;
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            results[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, selected.size()); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return results;
}

} // namespace ordtree
