#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "oturan/general_matching.hpp"
#include "oturan/matching.hpp"
#include "oturan/rng.hpp"

using namespace oturan;

namespace {

// Exponential reference: maximum matching size by trying every subset of
// edges that forms a matching.
int brute_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  size_t m = edges.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<char> used((size_t)n, 0);
    int size = 0;
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [a, b] = edges[i];
      if (a == b || used[(size_t)a] || used[(size_t)b]) {
        ok = false;
      } else {
        used[(size_t)a] = used[(size_t)b] = 1;
        ++size;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

BipartiteInstance random_bipartite(Rng& rng) {
  BipartiteInstance b;
  b.left = 1 + rng.below_int(6);
  b.right = 1 + rng.below_int(6);
  b.adj.resize((size_t)b.left);
  for (int x = 0; x < b.left; ++x)
    for (int y = 0; y < b.right; ++y)
      if (rng.below(100) < 40) b.adj[(size_t)x].push_back(y);
  return b;
}

int brute_bipartite(const BipartiteInstance& b) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < b.left; ++x)
    for (int y : b.adj[(size_t)x]) edges.emplace_back(x, b.left + y);
  return brute_matching(b.left + b.right, edges);
}

}  // namespace

TEST_CASE("bipartite matching matches the exponential reference") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    BipartiteInstance b = random_bipartite(rng);
    auto m = max_matching(b);
    CHECK(matching_size(m) == brute_bipartite(b));
    // Internal consistency: no right vertex matched twice.
    std::set<int> rights;
    for (int x = 0; x < b.left; ++x) {
      if (m[(size_t)x] < 0) continue;
      CHECK(std::count(b.adj[(size_t)x].begin(), b.adj[(size_t)x].end(),
                       m[(size_t)x]) == 1);
      CHECK(rights.insert(m[(size_t)x]).second);
    }
  }
}

TEST_CASE("hall certificate is saturating xor a genuine violator") {
  Rng rng(32);
  int saturated = 0, violated = 0;
  for (int trial = 0; trial < 600; ++trial) {
    BipartiteInstance b = random_bipartite(rng);
    HallCertificate c = hall_certificate(b);
    if (c.saturating) {
      ++saturated;
      CHECK(matching_size(c.matching) == b.left);
    } else {
      ++violated;
      CHECK_FALSE(c.violator.empty());
      std::set<int> nbhd;
      for (int x : c.violator) {
        CHECK(x >= 0);
        CHECK(x < b.left);
        for (int y : b.adj[(size_t)x]) nbhd.insert(y);
      }
      CHECK(nbhd.size() < c.violator.size());
    }
  }
  CHECK(saturated > 0);
  CHECK(violated > 0);
}

TEST_CASE("blossom matching agrees with the exponential reference") {
  Rng rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + rng.below_int(8);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.below(100) < 35) edges.emplace_back(a, b);
    if (edges.size() > 14) continue;
    auto mate = general_max_matching(n, edges);
    CHECK(general_matching_size(mate) == brute_matching(n, edges));
    for (int v = 0; v < n; ++v)
      if (mate[(size_t)v] >= 0) CHECK(mate[(size_t)mate[(size_t)v]] == v);
  }
}

TEST_CASE("blossom matching handles odd cycles") {
  auto tri = general_max_matching(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(general_matching_size(tri) == 1);
  auto c5 = general_max_matching(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(general_matching_size(c5) == 2);
  // Two triangles joined at vertex 2.
  auto bowtie = general_max_matching(
      5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(general_matching_size(bowtie) == 2);
  // Odd cycle with a pendant that forces rotation out of the blossom.
  auto flower = general_max_matching(
      6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(general_matching_size(flower) == 3);
}

TEST_CASE("matching inputs tolerate duplicates and loops") {
  auto mate = general_max_matching(3, {{0, 1}, {1, 0}, {2, 2}});
  CHECK(general_matching_size(mate) == 1);
}
