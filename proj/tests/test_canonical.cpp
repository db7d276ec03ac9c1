#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oturan/canonical.hpp"
#include "oturan/errors.hpp"
#include "oturan/oriented_graph.hpp"
#include "oturan/rng.hpp"
#include "oturan/verify.hpp"

using namespace oturan;

namespace {

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (auto [u, v] : g.arcs())
    arcs.emplace_back(perm[(size_t)u], perm[(size_t)v]);
  return OrientedGraph::build(g.order(), arcs);
}

bool brute_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count())
    return false;
  std::vector<int> perm((size_t)a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("canonical code is invariant under relabeling") {
  Rng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + rng.below_int(6);
    OrientedGraph g = random_oriented(n, 0.4, rng.next());
    std::string code = canonical_code(g);
    std::vector<int> perm((size_t)n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 6; ++rep) {
      rng.shuffle(perm);
      CHECK(canonical_code(relabel(g, perm)) == code);
    }
  }
}

TEST_CASE("code equality decides isomorphism on small graphs") {
  Rng rng(5150);
  int agreements = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + rng.below_int(4);  // brute force stays cheap
    OrientedGraph a = random_oriented(n, 0.5, rng.next());
    OrientedGraph b = random_oriented(n, 0.5, rng.next());
    bool brute = brute_isomorphic(a, b);
    CHECK(is_isomorphic(a, b) == brute);
    CHECK((canonical_code(a) == canonical_code(b)) == brute);
    if (brute) ++agreements;
  }
  // Make sure the sweep saw both outcomes.
  CHECK(agreements > 0);
  CHECK(agreements < 250);
}

TEST_CASE("codes separate the directed triangle from the path") {
  OrientedGraph tri = OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  OrientedGraph path = OrientedGraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_code(tri) != canonical_code(path));
  CHECK_FALSE(is_isomorphic(tri, path));
  CHECK(is_isomorphic(tri, relabel(tri, {2, 0, 1})));
}

TEST_CASE("code format: order prefix plus packed adjacency digits") {
  OrientedGraph g = OrientedGraph::build(3, {{0, 1}});
  std::string code = canonical_code(g);
  CHECK(code.size() == 2 + (9 + 3) / 4);
  CHECK(code.substr(0, 2) == "03");
  OrientedGraph empty1 = OrientedGraph::build(1, {});
  CHECK(canonical_code(empty1).substr(0, 2) == "01");
}

TEST_CASE("byte order of codes refines arc count at fixed order") {
  // The all-zero matrix is the smallest code; adding arcs can only
  // produce lexicographically larger canonical matrices.
  OrientedGraph empty = OrientedGraph::build(4, {});
  OrientedGraph one = OrientedGraph::build(4, {{0, 1}});
  CHECK(canonical_code(empty) < canonical_code(one));
}

TEST_CASE("order guard rejects oversized inputs") {
  GraphBuilder gb(12);
  try {
    canonical_code(gb.view());
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_too_large);
  }
  // A raised limit within capacity is honored.
  GraphBuilder gb11(11);
  CHECK(canonical_code(gb11.view(), 11).substr(0, 2) == "0b");
  // The encoding itself tops out at eleven vertices.
  try {
    canonical_code(gb11.view(), 12);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_too_large);
  }
}

TEST_CASE("isomorphism check tolerates unequal orders") {
  OrientedGraph a = OrientedGraph::build(2, {{0, 1}});
  OrientedGraph b = OrientedGraph::build(3, {{0, 1}});
  CHECK_FALSE(is_isomorphic(a, b));
}
