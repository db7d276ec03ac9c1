#pragma once

#include <string>

#include "oturan/oriented_graph.hpp"

namespace oturan {

/// Plain-text graph format:
///   first data line        "n m"
///   then exactly m lines   "u v"      (one arc each, 0-based)
/// Lines whose first non-blank character is '#' and blank lines are
/// ignored. Serialization emits arcs in lexicographic order, so
/// serialize(parse(serialize(g))) = serialize(g).
OrientedGraph parse_arclist(const std::string& text);

std::string serialize_arclist(const OrientedGraph& g);

}  // namespace oturan
