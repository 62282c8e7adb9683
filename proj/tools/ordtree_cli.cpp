// ordtree: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 negative answer (no embedding, solver refusal).

#include "ordtree/acceptance.hpp"
#include "ordtree/constructions.hpp"
#include "ordtree/containment.hpp"
#include "ordtree/io.hpp"
#include "ordtree/solver.hpp"
#include "ordtree/trees.hpp"
#include "ordtree/walks.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace ordtree;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInput = 2;
constexpr int kNegative = 3;

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

void emit(const Json& doc, const std::string& path)
{
    emit(doc.dump(2) + "\n", path);
}

std::vector<int> parse_ids(const std::string& suite)
{
    std::vector<int> ids;
    if (suite == "all")
        return ids;
    std::stringstream in(suite);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            ids.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw InputError("bad --suite entry '" + part + "' (expected all or a comma list of ids)");
        }
    }
    return ids;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Turan-type extremal problems for ordered and convex geometric trees"};
    app.require_subcommand(1);
    std::string out_path;

    auto* classify = app.add_subcommand("classify", "classify a tree pattern");
    std::string input;
    classify->add_option("--input", input, "graph JSON file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "build an extremal construction");
    std::string name;
    ConstructParams params;
    bool dot = false;
    bool svg = false;
    construct_cmd->add_option("--name", name, "pow2|fh_q|fh_r|gstar|f_n|f_n0")
        ->required()
        ->check(CLI::IsMember(construction_names()));
    construct_cmd->add_option("--n", params.n, "vertex count")->required();
    construct_cmd->add_option("--a", params.a, "gstar: a");
    construct_cmd->add_option("--b", params.b, "gstar: b");
    construct_cmd->add_option("--c", params.c, "gstar: c");
    construct_cmd->add_option("-o,--output", out_path, "output file");
    auto* dot_flag = construct_cmd->add_flag("--dot", dot, "emit Graphviz DOT");
    construct_cmd->add_flag("--svg", svg, "emit an SVG chord diagram")->excludes(dot_flag);

    auto* contains_cmd = app.add_subcommand("contains", "search for a pattern in a host");
    std::string host_path;
    std::string pattern_path;
    bool reflect_flag = false;
    bool all = false;
    contains_cmd->add_option("--host", host_path)->required();
    contains_cmd->add_option("--pattern", pattern_path)->required();
    contains_cmd->add_flag("--reflect", reflect_flag, "cg: also accept orientation-reversing maps");
    contains_cmd->add_flag("--all", all, "list every embedding");

    auto* solve = app.add_subcommand("solve", "exact extremal number");
    int n = 0;
    std::string mode_text;
    bool oracle = false;
    solve->add_option("--n", n)->required();
    solve->add_option("--pattern", pattern_path)->required();
    solve->add_option("--mode", mode_text, "ordered|cg (default: the pattern's)");
    solve->add_flag("--oracle", oracle, "naive enumeration instead of branch-and-bound");

    auto* embed = app.add_subcommand("embed", "constructive embedding of a z-tree into a dense host");
    std::string ztree_path;
    embed->add_option("--host", host_path)->required();
    embed->add_option("--ztree", ztree_path)->required();

    auto* extract = app.add_subcommand("extract", "large walk-free subgraph of a colored graph");
    std::string kind_text = "fast";
    std::string side_text = "B";
    std::uint64_t seed = 1;
    extract->add_option("--input", input)->required();
    extract->add_option("--kind", kind_text)->check(CLI::IsMember({"fast", "slow"}));
    extract->add_option("--start", side_text)->check(CLI::IsMember({"A", "B"}));
    extract->add_option("--seed", seed);
    extract->add_option("-o,--output", out_path);

    auto* enumerate = app.add_subcommand("enumerate", "all trees with k edges on [k+1], JSON lines");
    int k = 0;
    bool chi2 = false;
    enumerate->add_option("--edges", k)->required();
    enumerate->add_option("--mode", mode_text)->required();
    enumerate->add_flag("--chi2", chi2, "keep chromatic number two only");

    auto* catalog = app.add_subcommand("catalog", "minimal ordered non-z-trees");
    int max_edges = 5;
    std::string out_dir;
    catalog->add_option("--max-edges", max_edges);
    catalog->add_option("--out-dir", out_dir, "write one pattern file per entry");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string suite = "all";
    std::string report = "json";
    unsigned threads = 0;
    verify->add_option("--suite", suite, "all or comma-separated check ids");
    verify->add_option("--seed", seed);
    verify->add_option("--threads", threads, "0: $ORDTREE_THREADS or all cores");
    verify->add_option("--report", report)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*classify) {
            Graph t = read_graph_file(input);
            Verdict v = classify_tree(t);
            emit(to_json(v), "");
            return v.kind == VerdictKind::not_applicable ? kInput : kOk;
        }
        if (*construct_cmd) {
            Graph g = construct(name, params);
            if (dot)
                emit(to_dot(g), out_path);
            else if (svg)
                emit(to_svg(g), out_path);
            else
                emit(to_json(g), out_path);
            return kOk;
        }
        if (*contains_cmd) {
            Graph host = read_graph_file(host_path);
            Graph pattern = read_graph_file(pattern_path);
            SearchOptions opts;
            opts.allow_reflection = reflect_flag;
            if (reflect_flag && host.mode() != Mode::cyclic)
                throw InputError("--reflect applies to cg graphs only");
            std::vector<Embedding> found;
            if (all)
                found = find_all_embeddings(host, pattern, opts);
            else if (auto e = find_embedding(host, pattern, opts))
                found.push_back(*e);
            Json doc = {{"contains", !found.empty()}};
            if (all) {
                doc["count"] = found.size();
                doc["embeddings"] = Json::array();
                for (const auto& e : found)
                    doc["embeddings"].push_back(to_json(e));
            } else if (!found.empty()) {
                doc["embedding"] = to_json(found.front());
            }
            emit(doc, "");
            return found.empty() ? kNegative : kOk;
        }
        if (*solve) {
            Graph pattern = read_graph_file(pattern_path);
            if (!mode_text.empty())
                pattern = pattern.with_mode(parse_mode(mode_text));
            try {
                auto r = oracle ? extremal_number_naive(n, pattern) : extremal_number(n, pattern);
                emit(to_json(r), "");
            } catch (const SolverRefusal& e) {
                emit(Json{{"refused", e.what()}}, "");
                return kNegative;
            }
            return kOk;
        }
        if (*embed) {
            Graph host = read_graph_file(host_path);
            Graph tree = read_graph_file(ztree_path);
            auto e = embed_dense(host, tree);
            Json doc = {{"found", e.has_value()},
                        {"edges", host.size()},
                        {"threshold", dense_threshold(host.mode(), host.n(), static_cast<int>(tree.size()))}};
            if (e)
                doc["embedding"] = to_json(*e);
            emit(doc, "");
            return e ? kOk : kNegative;
        }
        if (*extract) {
            ColoredBipartite g(read_graph_file(input));
            WalkKind kind = parse_walk_kind(kind_text);
            Side start = parse_side(side_text);
            auto x = extract_walk_free(g, kind, start, seed);
            emit(to_json(x, kind, start), out_path);
            return kOk;
        }
        if (*enumerate) {
            Mode mode = parse_mode(mode_text);
            for_each_tree(k, mode, chi2 ? TreeFilter::chi2 : TreeFilter::all,
                          [](const Graph& g) { std::cout << to_json(g).dump() << "\n"; });
            return kOk;
        }
        if (*catalog) {
            auto cat = max_edges == 5 ? default_catalog() : derive_obstructions(max_edges);
            Json list = Json::array();
            for (std::size_t i = 0; i < cat.entries.size(); ++i) {
                const auto& e = cat.entries[i];
                Json doc = to_json(e.pattern);
                if (!out_dir.empty()) {
                    std::filesystem::create_directories(out_dir);
                    std::string file = out_dir + "/obstruction_" + std::to_string(i + 1) + ".json";
                    write_text_file(file, doc.dump() + "\n");
                }
                doc["provenance"] = e.provenance == Provenance::pinned ? "pinned" : "derived";
                list.push_back(doc);
            }
            emit(Json{{"max_edges", max_edges}, {"patterns", list}}, "");
            return kOk;
        }
        if (*verify) {
            auto results = run_acceptance(parse_ids(suite), threads, seed);
            bool ok = !results.empty();
            std::ostringstream text;
            if (report == "csv") {
                text << "id,name,status,seconds\n";
                for (const auto& r : results)
                    text << r.id << ",\"" << r.name << "\"," << (r.passed ? "pass" : "fail") << "," << r.seconds
                         << "\n";
            } else {
                Json doc = Json::array();
                for (const auto& r : results)
                    doc.push_back({{"id", r.id},
                                   {"name", r.name},
                                   {"status", r.passed ? "pass" : "fail"},
                                   {"detail", r.detail},
                                   {"seconds", r.seconds}});
                text << doc.dump(2) << "\n";
            }
            for (const auto& r : results)
                ok = ok && r.passed;
            emit(text.str(), out_path);
            return ok ? kOk : kFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kInput;
}
