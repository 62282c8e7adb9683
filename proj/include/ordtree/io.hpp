#pragma once

// JSON, DOT and SVG encodings of graphs and results.

#include "ordtree/containment.hpp"
#include "ordtree/graph.hpp"
#include "ordtree/solver.hpp"
#include "ordtree/trees.hpp"
#include "ordtree/walks.hpp"

#include <json.hpp>

#include <string>

namespace ordtree {

using Json = nlohmann::json;

/// {"mode":"ordered"|"cg","n":..,"edges":[[u,v],..],"colors":[..]} (colors only when present).
Json to_json(const Graph& g);
/// Strict inverse of to_json; throws InputError on malformed documents.
Graph graph_from_json(const Json& doc);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const Embedding& e);
Json to_json(const ZDecomposition& z);
Json to_json(const Verdict& v);
Json to_json(const ExtremalResult& r);
Json to_json(const Walk4& w);
Json to_json(const Extraction& x, WalkKind kind, Side start);

std::string to_dot(const Graph& g);
/// Chord diagram: vertices clockwise on a circle starting at the top.
std::string to_svg(const Graph& g);

} // namespace ordtree
