#pragma once

#include <utility>
#include <vector>

#include "oturan/errors.hpp"
#include "oturan/vertex_set.hpp"

namespace oturan {

using Arc = std::pair<int, int>;

/// Undirected companion of an oriented graph: every arc becomes an edge.
struct UnderlyingGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  int edge_count() const { return (int)edges.size(); }
};

/// Loop-free digraph with no anti-parallel arc pair. Immutable once built;
/// adjacency is kept as per-vertex in- and out-bitsets.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  /// Validates every arc; throws without leaving a partial graph behind.
  static OrientedGraph build(int n, const std::vector<Arc>& arcs);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].contains(v);
  }

  const VertexSet& in_neighbors(int v) const {
    check_vertex(v);
    return in_[v];
  }
  const VertexSet& out_neighbors(int v) const {
    check_vertex(v);
    return out_[v];
  }
  int in_degree(int v) const {
    check_vertex(v);
    return in_deg_[v];
  }
  int out_degree(int v) const {
    check_vertex(v);
    return out_deg_[v];
  }
  int max_in_degree() const;

  /// |{(u,v) in arcs : u in X, v in Y}|. X and Y may overlap; with X = Y
  /// this counts the arcs inside X.
  int arcs_between(const VertexSet& X, const VertexSet& Y) const;

  UnderlyingGraph underlying() const;

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  bool operator==(const OrientedGraph& other) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      fail(Errc::vertex_out_of_range,
           "vertex " + std::to_string(v) + " out of range [0, " +
               std::to_string(n_) + ")");
  }

  friend class GraphBuilder;

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<VertexSet> in_, out_;
  std::vector<int> in_deg_, out_deg_;
};

/// Incremental add/remove companion used by the search and heuristic
/// modules. Maintains the OrientedGraph invariants at every step, so the
/// exposed snapshot is always a valid oriented graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const OrientedGraph& g) : g_(g) {}

  const OrientedGraph& view() const { return g_; }
  int order() const { return g_.n_; }

  bool can_add(int u, int v) const {
    return u != v && !g_.out_[u].contains(v) && !g_.out_[v].contains(u);
  }
  /// Pre: can_add(u, v).
  void add_arc(int u, int v);
  /// Pre: arc present.
  void remove_arc(int u, int v);

  OrientedGraph take() && { return std::move(g_); }

 private:
  OrientedGraph g_;
};

}  // namespace oturan
