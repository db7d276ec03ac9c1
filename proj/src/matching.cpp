#include "oturan/matching.hpp"

#include <algorithm>

namespace oturan {

namespace {

bool augment(const BipartiteInstance& b, int x, std::vector<int>& match_left,
             std::vector<int>& match_right, std::vector<char>& seen) {
  for (int y : b.adj[x]) {
    if (seen[y]) continue;
    seen[y] = 1;
    if (match_right[y] == -1 ||
        augment(b, match_right[y], match_left, match_right, seen)) {
      match_left[x] = y;
      match_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> max_matching(const BipartiteInstance& b) {
  std::vector<int> match_left(b.left, -1), match_right(b.right, -1);
  for (int x = 0; x < b.left; ++x) {
    std::vector<char> seen(b.right, 0);
    augment(b, x, match_left, match_right, seen);
  }
  return match_left;
}

int matching_size(const std::vector<int>& matching) {
  int size = 0;
  for (int y : matching)
    if (y != -1) ++size;
  return size;
}

HallCertificate hall_certificate(const BipartiteInstance& b) {
  HallCertificate cert;
  cert.matching = max_matching(b);
  std::vector<int> match_right(b.right, -1);
  for (int x = 0; x < b.left; ++x)
    if (cert.matching[x] != -1) match_right[cert.matching[x]] = x;

  std::vector<int> stack;
  std::vector<char> left_seen(b.left, 0), right_seen(b.right, 0);
  for (int x = 0; x < b.left; ++x)
    if (cert.matching[x] == -1) {
      left_seen[x] = 1;
      stack.push_back(x);
    }
  if (stack.empty()) {
    cert.saturating = true;
    return cert;
  }
  // Alternate: left to right along any edge, right to left along a
  // matching edge only.
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : b.adj[x]) {
      if (right_seen[y]) continue;
      right_seen[y] = 1;
      int x2 = match_right[y];
      if (x2 != -1 && !left_seen[x2]) {
        left_seen[x2] = 1;
        stack.push_back(x2);
      }
    }
  }
  for (int x = 0; x < b.left; ++x)
    if (left_seen[x]) cert.violator.push_back(x);
  return cert;
}

}  // namespace oturan
