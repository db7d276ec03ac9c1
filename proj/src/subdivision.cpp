#include "oturan/subdivision.hpp"

#include <algorithm>
#include <cassert>

#include "oturan/general_matching.hpp"
#include "oturan/matching.hpp"

namespace oturan {

namespace {

// Usable leaf->spoke arcs at center v: (w, u) with u in N^-(v),
// w in N^-(u), w != v. Heads may be restricted to a set and tails banned
// from one (used to force part of the spoke set during extraction).
std::vector<std::pair<int, int>> conflict_edges(const OrientedGraph& g, int v,
                                                const VertexSet* head_allowed,
                                                const VertexSet* tail_banned) {
  std::vector<std::pair<int, int>> edges;
  g.in_neighbors(v).for_each([&](int u) {
    if (head_allowed && !head_allowed->contains(u)) return;
    g.in_neighbors(u).for_each([&](int w) {
      if (w == v) return;
      if (tail_banned && tail_banned->contains(w)) return;
      edges.emplace_back(w, u);
    });
  });
  return edges;
}

int disjoint_pair_max(const OrientedGraph& g, int v,
                      const VertexSet* head_allowed,
                      const VertexSet* tail_banned) {
  auto edges = conflict_edges(g, v, head_allowed, tail_banned);
  if (edges.empty()) return 0;
  return general_matching_size(general_max_matching(g.order(), edges));
}

// Can every forced spoke still be fed by its own leaf? All forced spokes'
// conflict edges run to non-forced vertices, so this is plain bipartite
// saturation.
bool forced_saturable(const OrientedGraph& g, int v,
                      const std::vector<int>& forced,
                      const VertexSet& banned_tails) {
  BipartiteInstance b;
  b.left = (int)forced.size();
  b.right = g.order();
  b.adj.resize(b.left);
  for (int i = 0; i < b.left; ++i)
    g.in_neighbors(forced[i]).for_each([&](int w) {
      if (w != v && !banned_tails.contains(w)) b.adj[i].push_back(w);
    });
  return matching_size(max_matching(b)) == b.left;
}

// Is there a set of t disjoint (leaf, spoke) pairs whose spoke set
// contains `forced` and stays inside `heads`? Saturability of the forced
// spokes plus a matching of size t suffices: a matching covering a
// saturable set can always be grown to maximum size without uncovering
// it (alternating-path exchange).
bool feasible(const OrientedGraph& g, int v, const std::vector<int>& forced,
              const VertexSet& heads, const VertexSet& banned_tails, int t) {
  if (!forced_saturable(g, v, forced, banned_tails)) return false;
  return disjoint_pair_max(g, v, &heads, &banned_tails) >= t;
}

// Lexicographically smallest spoke set of size t at center v, then the
// smallest leaf assignment along it. Pre: t >= 1 and t disjoint pairs
// exist at v.
SubdivisionWitness extract_witness(const OrientedGraph& g, int v, int t) {
  int n = g.order();
  std::vector<int> candidates = g.in_neighbors(v).members();
  std::vector<int> spokes;
  for (size_t idx = 0; idx < candidates.size() && (int)spokes.size() < t;
       ++idx) {
    int u = candidates[idx];
    VertexSet heads(n), banned(n);
    for (int f : spokes) {
      heads.insert(f);
      banned.insert(f);
    }
    heads.insert(u);
    banned.insert(u);
    for (size_t j = idx + 1; j < candidates.size(); ++j)
      heads.insert(candidates[j]);
    std::vector<int> forced = spokes;
    forced.push_back(u);
    if (feasible(g, v, forced, heads, banned, t)) spokes.push_back(u);
  }
  assert((int)spokes.size() == t);

  VertexSet spoke_set(n);
  for (int f : spokes) spoke_set.insert(f);
  std::vector<int> leaves(t, -1);
  VertexSet used(n);
  for (int i = 0; i < t; ++i) {
    bool placed = false;
    auto cand = g.in_neighbors(spokes[i]).members();
    for (int w : cand) {
      if (w == v || spoke_set.contains(w) || used.contains(w)) continue;
      // Remaining spokes must stay jointly feedable once w is consumed.
      BipartiteInstance b;
      b.left = t - i - 1;
      b.right = n;
      b.adj.resize(b.left);
      bool ok = true;
      for (int j = i + 1; j < t; ++j)
        g.in_neighbors(spokes[j]).for_each([&](int x) {
          if (x != v && !spoke_set.contains(x) && !used.contains(x) && x != w)
            b.adj[j - i - 1].push_back(x);
        });
      ok = matching_size(max_matching(b)) == b.left;
      if (ok) {
        leaves[i] = w;
        used.insert(w);
        placed = true;
        break;
      }
    }
    assert(placed);
    (void)placed;
  }

  SubdivisionWitness wit;
  wit.k = t;
  wit.center = v;
  wit.spokes = std::move(spokes);
  wit.leaves = std::move(leaves);
  return wit;
}

// Existence at one center, behind the cheap necessary conditions.
bool center_has(const OrientedGraph& g, int v, int k) {
  if (g.in_degree(v) < k) return false;
  int feedable = 0;
  g.in_neighbors(v).for_each([&](int u) {
    if (g.in_degree(u) >= 1) ++feedable;
  });
  if (feedable < k) return false;
  return disjoint_pair_max(g, v, nullptr, nullptr) >= k;
}

void require_positive_k(int k) {
  if (k < 1) fail(Errc::domain_error, "star size must be at least 1");
}

}  // namespace

bool SubdivisionWitness::validate(const OrientedGraph& g) const {
  int n = g.order();
  if (k < 1 || (int)spokes.size() != k || (int)leaves.size() != k)
    return false;
  std::vector<int> all;
  all.push_back(center);
  all.insert(all.end(), spokes.begin(), spokes.end());
  all.insert(all.end(), leaves.begin(), leaves.end());
  for (int x : all)
    if (x < 0 || x >= n) return false;
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int i = 0; i < k; ++i)
    if (!g.has_arc(spokes[i], center) || !g.has_arc(leaves[i], spokes[i]))
      return false;
  return true;
}

InpathsResult max_disjoint_inpaths(const OrientedGraph& g, int v, int k) {
  require_positive_k(k);
  g.in_neighbors(v);  // range check
  InpathsResult r;
  r.count = std::min(k, disjoint_pair_max(g, v, nullptr, nullptr));
  if (r.count > 0) {
    SubdivisionWitness wit = extract_witness(g, v, r.count);
    for (int i = 0; i < r.count; ++i)
      r.pairs.emplace_back(wit.leaves[i], wit.spokes[i]);
  }
  return r;
}

std::optional<SubdivisionWitness> find_subdivision(const OrientedGraph& g,
                                                   int k) {
  require_positive_k(k);
  if (g.order() < 2 * k + 1) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    if (!center_has(g, v, k)) continue;
    return extract_witness(g, v, k);
  }
  return std::nullopt;
}

bool is_free(const OrientedGraph& g, int k) {
  require_positive_k(k);
  if (g.order() < 2 * k + 1) return true;
  for (int v = 0; v < g.order(); ++v)
    if (center_has(g, v, k)) return false;
  return true;
}

namespace {

bool brute_leaves(const OrientedGraph& g, int v,
                  const std::vector<int>& spokes, size_t i,
                  std::vector<int>& leaves, std::vector<char>& taken) {
  if (i == spokes.size()) return true;
  auto cand = g.in_neighbors(spokes[i]).members();
  for (int w : cand) {
    if (w == v || taken[w]) continue;
    if (std::find(spokes.begin(), spokes.end(), w) != spokes.end()) continue;
    taken[w] = 1;
    leaves[i] = w;
    if (brute_leaves(g, v, spokes, i + 1, leaves, taken)) return true;
    taken[w] = 0;
  }
  return false;
}

bool brute_spokes(const OrientedGraph& g, int v, const std::vector<int>& inn,
                  size_t start, int k, std::vector<int>& spokes,
                  std::vector<int>& leaves) {
  if ((int)spokes.size() == k) {
    std::vector<char> taken(g.order(), 0);
    return brute_leaves(g, v, spokes, 0, leaves, taken);
  }
  for (size_t i = start; i + (k - spokes.size()) <= inn.size(); ++i) {
    spokes.push_back(inn[i]);
    if (brute_spokes(g, v, inn, i + 1, k, spokes, leaves)) return true;
    spokes.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SubdivisionWitness> brute_force_subdivision(
    const OrientedGraph& g, int k, BruteForceGuard guard) {
  require_positive_k(k);
  if (g.order() > guard.max_order || k > guard.max_k)
    fail(Errc::instance_too_large,
         "exhaustive subdivision search limited to order " +
             std::to_string(guard.max_order) + " and star size " +
             std::to_string(guard.max_k));
  if (g.order() < 2 * k + 1) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    auto inn = g.in_neighbors(v).members();
    if ((int)inn.size() < k) continue;
    std::vector<int> spokes, leaves(k, -1);
    if (brute_spokes(g, v, inn, 0, k, spokes, leaves)) {
      SubdivisionWitness wit;
      wit.k = k;
      wit.center = v;
      wit.spokes = std::move(spokes);
      wit.leaves = std::move(leaves);
      return wit;
    }
  }
  return std::nullopt;
}

bool creates_subdivision(const OrientedGraph& g, int k, int b) {
  require_positive_k(k);
  if (g.order() < 2 * k + 1) return false;
  if (center_has(g, b, k)) return true;
  bool found = false;
  g.out_neighbors(b).for_each([&](int c) {
    if (!found && center_has(g, c, k)) found = true;
  });
  return found;
}

}  // namespace oturan
