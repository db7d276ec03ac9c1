#pragma once

#include <algorithm>
#include <vector>

namespace oturan {

/// Raw integer count vector. Observation order is preserved; comparisons
/// sort a copy.
using DegreeVector = std::vector<int>;

inline DegreeVector decreasing(DegreeVector v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

/// x covers y: x has at least as many components and, after sorting both
/// in decreasing order, dominates y componentwise.
inline bool covers(const DegreeVector& x, const DegreeVector& y) {
  if (x.size() < y.size()) return false;
  DegreeVector xs = decreasing(x), ys = decreasing(y);
  for (size_t i = 0; i < ys.size(); ++i)
    if (xs[i] < ys[i]) return false;
  return true;
}

}  // namespace oturan
