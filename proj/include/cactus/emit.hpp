#pragma once

#include <string>
#include <string_view>

#include "cactus/graph.hpp"

namespace cactus {

/// DOT undirected graph: one `<id> [label="<label>"];` line per vertex in id
/// order, then one `<u> -- <v>;` line per edge (u < v, lexicographic).
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Parses the DOT subset written by to_dot. Vertex ids must be dense from 0.
/// Throws std::invalid_argument on malformed input.
Graph from_dot(std::string_view text);

/// {"family", "aux", "n", "vertex_count", "edge_count", "edges": [[u,v],...],
///  "labels": {"<id>": "<label>", ...}} with labels in id order.
std::string to_json(const Graph& g, const GraphKey& key);

/// "u v" per line, edges as in Graph::edges().
std::string to_edge_list(const Graph& g);

}  // namespace cactus
