#include "oturan/oriented_graph.hpp"

#include <algorithm>
#include <cassert>

namespace oturan {

OrientedGraph OrientedGraph::build(int n, const std::vector<Arc>& arcs) {
  if (n < 0) fail(Errc::domain_error, "vertex count must be non-negative");
  OrientedGraph g;
  g.n_ = n;
  g.in_.assign(n, VertexSet(n));
  g.out_.assign(n, VertexSet(n));
  g.in_deg_.assign(n, 0);
  g.out_deg_.assign(n, 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::vertex_out_of_range,
           "arc (" + std::to_string(u) + "," + std::to_string(v) +
               ") out of range for order " + std::to_string(n));
    if (u == v)
      fail(Errc::loop_arc, "loop arc at vertex " + std::to_string(u));
    if (g.out_[u].contains(v))
      fail(Errc::duplicate_arc,
           "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (g.out_[v].contains(u))
      fail(Errc::anti_parallel,
           "arcs (" + std::to_string(u) + "," + std::to_string(v) + ") and (" +
               std::to_string(v) + "," + std::to_string(u) +
               ") are anti-parallel");
    g.out_[u].insert(v);
    g.in_[v].insert(u);
    ++g.out_deg_[u];
    ++g.in_deg_[v];
    ++g.arc_count_;
  }
  return g;
}

int OrientedGraph::max_in_degree() const {
  int best = 0;
  for (int d : in_deg_) best = std::max(best, d);
  return best;
}

int OrientedGraph::arcs_between(const VertexSet& X, const VertexSet& Y) const {
  int count = 0;
  X.for_each([&](int u) {
    check_vertex(u);
    count += out_[u].intersection_count(Y);
  });
  // Y is range-checked implicitly: bitsets are sized to n.
  return count;
}

UnderlyingGraph OrientedGraph::underlying() const {
  UnderlyingGraph g;
  g.n = n_;
  g.edges.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    out_[u].for_each([&](int v) {
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    });
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;  // already lexicographic: u ascending, v ascending per bitset
}

GraphBuilder::GraphBuilder(int n) {
  g_ = OrientedGraph::build(n, {});
}

void GraphBuilder::add_arc(int u, int v) {
  assert(can_add(u, v));
  g_.out_[u].insert(v);
  g_.in_[v].insert(u);
  ++g_.out_deg_[u];
  ++g_.in_deg_[v];
  ++g_.arc_count_;
}

void GraphBuilder::remove_arc(int u, int v) {
  assert(g_.out_[u].contains(v));
  g_.out_[u].erase(v);
  g_.in_[v].erase(u);
  --g_.out_deg_[u];
  --g_.in_deg_[v];
  --g_.arc_count_;
}

}  // namespace oturan
