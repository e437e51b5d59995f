#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "graphrel/graph.hpp"

namespace graphrel {

/**
 * Edge-list text: one edge per line as two whitespace-separated labels,
 * `#` starts a comment. An optional first line `n=<count>` fixes the vertex
 * count; labels must then be integers in [0, count) and isolated vertices are
 * kept. Without the header, integer labels are indexed in ascending order and
 * any other labels in order of first appearance.
 */
Graph read_edge_list(std::istream& in);

/// JSON object `{"n": <count>, "edges": [[u, v], ...]}` with 0-based indices.
Graph graph_from_json(const nlohmann::json& j);

/// Dispatches on extension: `.json` is JSON, anything else edge-list text.
Graph read_graph_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
nlohmann::json graph_to_json(const Graph& g);

} // namespace graphrel
