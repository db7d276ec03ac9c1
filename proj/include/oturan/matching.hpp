#pragma once

#include <vector>

namespace oturan {

/// Bipartite adjacency between a left side 0..left-1 and a right side
/// 0..right-1. Sides are index spaces of their own, unrelated to any
/// graph's vertex numbering.
struct BipartiteInstance {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // adj[x]: right neighbors of left x
};

/// Hall certificate: either a matching saturating the left side, or a set
/// S of left vertices whose joint neighborhood is smaller than S.
struct HallCertificate {
  bool saturating = false;
  std::vector<int> matching;  // matching[x] = matched right vertex, or -1
  std::vector<int> violator;  // left indices, nonempty iff !saturating
};

/// Maximum matching via augmenting paths. Left vertices are processed in
/// increasing index and right candidates tried in increasing index, so the
/// result is deterministic. Returns matching[x] = right partner or -1.
std::vector<int> max_matching(const BipartiteInstance& b);

int matching_size(const std::vector<int>& matching);

/// Saturating iff max_matching saturates the left side; otherwise the
/// violator is every unmatched left vertex together with all left ends
/// reachable from one by an alternating path, which pins |N(S)| < |S|.
HallCertificate hall_certificate(const BipartiteInstance& b);

}  // namespace oturan
