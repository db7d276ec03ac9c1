#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oturan/oriented_graph.hpp"

namespace oturan {

/// Largest known general lower bound for the maximum arc count of an
/// order-n oriented graph avoiding the subdivided in-star with k spokes:
/// floor((n+k-1)^2 / 4). For k in {2,3} and large n this is the exact
/// maximum.
long long turan_formula(int n, int k);

struct Bounds {
  long long lower = 0;
  long long upper = 0;
};

/// Proven sandwich for the open regime k >= 4, n >= 3k+1:
/// lower = turan_formula(n,k), upper = lower + (k-1)*n.
Bounds turan_bounds(int n, int k);

/// Circulant on t vertices: arc i -> j exactly when (i - j) mod t lies in
/// {1, ..., r}. Every vertex then has in-degree and out-degree r. Needs
/// t >= 2r+1, else some pair would carry both orientations.
OrientedGraph circulant_inregular(int t, int r);

/// How D[Y] is made in-degree (k-1)-regular: one circulant over all of Y,
/// or disjoint circulant blocks of the given sizes (for k = 2 the blocks
/// are plain directed cycles). Every block needs at least 2k-1 vertices.
struct YScheme {
  enum class Kind { circulant, cycles };
  Kind kind = Kind::circulant;
  std::vector<int> blocks;

  static YScheme cycles(std::vector<int> sizes);
  /// "circulant" or "cycles:<a,b,...>"; anything else is a SchemeError.
  static YScheme parse(const std::string& text);
  std::string to_string() const;
};

struct ConstructionParams {
  int n = 0;
  int k = 0;
  std::optional<int> split;  // |X| override; default floor((n-k+1)/2)
  YScheme y_scheme;
};

/// The lower-bound digraph: V = X u Y with |X| = split, every X->Y arc
/// present, no arcs inside X, and D[Y] in-degree (k-1)-regular per the
/// scheme. With a default split the arc count equals turan_formula(n,k),
/// and the result avoids the subdivided in-star: candidate centers lie in
/// Y, but only their k-1 in-neighbors inside Y can be fed by a leaf.
OrientedGraph construct_lower(const ConstructionParams& p);

/// Member of the characterized extremal family (k = 2 needs n >= 16,
/// k = 3 needs n >= 40). The split may be either endpoint of the family
/// window; defaulted it coincides with construct_lower's default.
OrientedGraph extremal_member(int n, int k, const YScheme& scheme = {},
                              std::optional<int> split = {});

enum class FixtureKind {
  h1,
  h2,
  h3,
  h4,
  h5,
  h6,
  h7,
  in_star,
  in_star_subdivision,
};

/// Small named digraphs used throughout the tests and the verification
/// harness. k applies to in_star and in_star_subdivision only. Vertex
/// numbering is documented per fixture in the implementation and README.
OrientedGraph fixture(FixtureKind kind, int k = 0);

/// Names as accepted by the command line: "H1".."H7", "star:K",
/// "subdiv:K".
OrientedGraph fixture_by_name(const std::string& name);

}  // namespace oturan
