#pragma once

#include <utility>
#include <vector>

namespace oturan {

/// Maximum matching in a simple undirected graph (blossom contraction,
/// O(V^3)). Returns mate[v] = matched partner or -1. Deterministic:
/// exposed vertices are grown in increasing order, adjacency in sorted
/// order. Duplicate edges and self-loops in the input are ignored.
std::vector<int> general_max_matching(
    int n, const std::vector<std::pair<int, int>>& edges);

int general_matching_size(const std::vector<int>& mate);

}  // namespace oturan
