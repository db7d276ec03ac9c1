#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "oturan/covering.hpp"
#include "oturan/errors.hpp"
#include "oturan/oriented_graph.hpp"
#include "oturan/rng.hpp"
#include "oturan/verify.hpp"
#include "oturan/vertex_set.hpp"

using namespace oturan;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::domain_error;
}

}  // namespace

TEST_CASE("graph build validates its input atomically") {
  CHECK(code_of([] { OrientedGraph::build(3, {{0, 0}}); }) ==
        Errc::loop_arc);
  CHECK(code_of([] { OrientedGraph::build(3, {{0, 1}, {0, 1}}); }) ==
        Errc::duplicate_arc);
  CHECK(code_of([] { OrientedGraph::build(3, {{0, 1}, {1, 0}}); }) ==
        Errc::anti_parallel);
  CHECK(code_of([] { OrientedGraph::build(3, {{0, 3}}); }) ==
        Errc::vertex_out_of_range);
  CHECK(code_of([] { OrientedGraph::build(3, {{-1, 2}}); }) ==
        Errc::vertex_out_of_range);
}

TEST_CASE("degrees and neighborhoods on a hand-built graph") {
  OrientedGraph g = OrientedGraph::build(4, {{0, 2}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.arc_count() == 3);
  CHECK(g.in_degree(2) == 2);
  CHECK(g.out_degree(2) == 1);
  CHECK(g.in_degree(0) == 0);
  CHECK(g.max_in_degree() == 2);
  CHECK(g.has_arc(0, 2));
  CHECK_FALSE(g.has_arc(2, 0));
  CHECK(g.in_neighbors(2).members() == std::vector<int>{0, 1});
  CHECK(g.out_neighbors(2).members() == std::vector<int>{3});
}

TEST_CASE("degree sums and underlying edges match the arc count") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    int n = 2 + (int)(seed % 9);
    OrientedGraph g = random_oriented(n, 0.5, derive_seed(99, seed));
    long long in_sum = 0, out_sum = 0;
    for (int v = 0; v < n; ++v) {
      in_sum += g.in_degree(v);
      out_sum += g.out_degree(v);
    }
    CHECK(in_sum == g.arc_count());
    CHECK(out_sum == g.arc_count());
    CHECK(g.underlying().edge_count() == g.arc_count());
    std::vector<Arc> arcs = g.arcs();
    CHECK((int)arcs.size() == g.arc_count());
    CHECK(std::is_sorted(arcs.begin(), arcs.end()));
  }
}

TEST_CASE("arcs_between counts ordered pairs across vertex sets") {
  OrientedGraph g =
      OrientedGraph::build(5, {{0, 2}, {0, 3}, {1, 2}, {3, 4}, {2, 4}});
  VertexSet a(5), b(5);
  a.insert(0);
  a.insert(1);
  b.insert(2);
  b.insert(3);
  CHECK(g.arcs_between(a, b) == 3);
  CHECK(g.arcs_between(b, a) == 0);
  CHECK(g.arcs_between(b, b) == 0);
}

TEST_CASE("builder supports incremental mutation") {
  GraphBuilder gb(4);
  CHECK(gb.can_add(0, 1));
  gb.add_arc(0, 1);
  CHECK_FALSE(gb.can_add(0, 1));
  CHECK_FALSE(gb.can_add(1, 0));
  CHECK_FALSE(gb.can_add(2, 2));
  gb.add_arc(1, 2);
  gb.remove_arc(0, 1);
  CHECK(gb.can_add(1, 0));
  OrientedGraph g = std::move(gb).take();
  CHECK(g.arc_count() == 1);
  CHECK(g.has_arc(1, 2));
}

TEST_CASE("vertex set operations") {
  VertexSet s(70);
  s.insert(0);
  s.insert(63);
  s.insert(64);
  s.insert(69);
  CHECK(s.count() == 4);
  CHECK(s.contains(64));
  s.erase(63);
  CHECK_FALSE(s.contains(63));
  CHECK(s.members() == std::vector<int>{0, 64, 69});
  VertexSet t(70);
  t.insert(64);
  t.insert(1);
  CHECK(s.intersection_count(t) == 1);
  t |= s;
  CHECK(t.count() == 4);
  int visited = 0;
  t.for_each([&](int) { ++visited; });
  CHECK(visited == 4);
}

TEST_CASE("covering relation on integer vectors") {
  CHECK(covers({2, 4, 3}, {3, 2, 1}));
  CHECK_FALSE(covers({3, 3, 3}, {4, 3, 3}));
  CHECK_FALSE(covers({5, 5}, {1, 1, 1}));
  CHECK(covers({3, 1, 2}, {3, 2, 1}));
  CHECK(covers({}, {}));
  CHECK_FALSE(covers({}, {1}));

  // Reflexive, order-insensitive, transitive on samples.
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    DegreeVector x;
    for (int i = 0; i < 1 + rng.below_int(5); ++i)
      x.push_back(rng.below_int(6));
    CHECK(covers(x, x));
    DegreeVector shuffled = x;
    rng.shuffle(shuffled);
    CHECK(covers(shuffled, x));
    CHECK(covers(x, shuffled));
  }
  CHECK(covers({5, 4, 4}, {4, 4, 3}));
  CHECK(covers({4, 4, 3}, {3, 3, 1}));
  CHECK(covers({5, 4, 4}, {3, 3, 1}));
}

TEST_CASE("decreasing sorts a copy in nonincreasing order") {
  CHECK(decreasing({1, 3, 2}) == DegreeVector{3, 2, 1});
  CHECK(decreasing({}) == DegreeVector{});
}

TEST_CASE("error names are stable identifiers") {
  CHECK(std::string(errc_name(Errc::loop_arc)) == "LoopArc");
  CHECK(std::string(errc_name(Errc::guard_exceeded)) == "GuardExceeded");
  CHECK(std::string(errc_name(Errc::schema_error)) == "SchemaError");
  Error e(Errc::domain_error, "boom");
  CHECK(e.code() == Errc::domain_error);
  CHECK(std::string(e.what()) == "boom");
}

TEST_CASE("portable rng primitives") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 200; ++i) {
    uint64_t x = c.below(10);
    CHECK(x < 10);
    double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}
