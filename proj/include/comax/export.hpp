#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "comax/graph.hpp"

namespace comax {

/// Undirected DOT with one node line per vertex (element label) and one
/// "u -- v" line per edge, u < v, sorted.
std::string to_dot(const SimpleGraph& g);

/// {n, labels, edges: [[i, j], ...]} with i < j, sorted.
nlohmann::json to_json(const SimpleGraph& g);

/// Inverses of the two exports; they accept exactly what the exporters
/// emit and throw ParseError otherwise.
SimpleGraph graph_from_json(const nlohmann::json& doc);
SimpleGraph graph_from_dot(std::string_view text);

} // namespace comax
