#pragma once

#include <string>

#include "oturan/oriented_graph.hpp"

namespace oturan {

/// Largest order accepted by canonical_code unless the caller raises it.
/// Exact search over relabelings (with pruning) is instant up to here.
inline constexpr int kDefaultCanonicalLimit = 10;

/// Label-invariant encoding: two graphs get the same code exactly when they
/// are isomorphic. The code is the lexicographically smallest row-major
/// adjacency bit matrix over all vertex relabelings, rendered as lowercase
/// hex (two digits of n, then the n*n bits packed four per digit). Byte
/// order of codes matches lexicographic order of the underlying matrices.
std::string canonical_code(const OrientedGraph& g,
                           int limit = kDefaultCanonicalLimit);

bool is_isomorphic(const OrientedGraph& a, const OrientedGraph& b,
                   int limit = kDefaultCanonicalLimit);

}  // namespace oturan
