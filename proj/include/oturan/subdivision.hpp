#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oturan/oriented_graph.hpp"

namespace oturan {

/// A concrete embedded copy of the subdivided in-star: leaves[i] ->
/// spokes[i] -> center, with all 2k+1 vertices distinct.
struct SubdivisionWitness {
  int k = 0;
  int center = -1;
  std::vector<int> spokes;
  std::vector<int> leaves;

  /// Checks the witness against its defining invariants in g.
  bool validate(const OrientedGraph& g) const;
};

struct InpathsResult {
  int count = 0;
  /// (leaf, spoke) pairs realizing the count, sorted by spoke.
  std::vector<std::pair<int, int>> pairs;
};

/// Maximum number of internally-vertex-disjoint directed 2-paths
/// w -> u -> v with u an in-neighbor of v, all spokes and leaves distinct
/// from each other and from v, truncated at k. Disjointness couples the
/// two roles (a vertex may serve as spoke or leaf, never both), so this
/// is a maximum matching in the conflict graph whose edges are the usable
/// leaf->spoke arcs; that graph can contain odd cycles (a directed
/// triangle among in-neighbors of v), hence the general-matching engine.
InpathsResult max_disjoint_inpaths(const OrientedGraph& g, int v, int k);

/// First witness in scan order: smallest center, then lexicographically
/// smallest spoke set, then smallest leaf assignment.
std::optional<SubdivisionWitness> find_subdivision(const OrientedGraph& g,
                                                   int k);

/// True iff g has no subdivided in-star with k spokes. Graphs on fewer
/// than 2k+1 vertices are always free.
bool is_free(const OrientedGraph& g, int k);

struct BruteForceGuard {
  int max_order = 12;
  int max_k = 5;
};

/// Independent oracle: enumerates centers, spoke subsets, and injective
/// leaf assignments directly. Shares no search machinery with
/// find_subdivision. Existence always agrees; witnesses may differ.
std::optional<SubdivisionWitness> brute_force_subdivision(
    const OrientedGraph& g, int k, BruteForceGuard guard = {});

/// Incremental hook for the search modules: given that g was free before
/// an arc with head b was added, a new copy must use that arc as
/// spoke->center or leaf->spoke, so only centers in {b} and the
/// out-neighborhood of b need rechecking. Returns true iff one of those
/// centers now carries a copy.
bool creates_subdivision(const OrientedGraph& g, int k, int b);

}  // namespace oturan
