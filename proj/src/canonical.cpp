#include "oturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace oturan {

namespace {

// Row-major n*n bit matrix, n <= 10, packed so that comparing the two
// words as an unsigned pair equals lexicographic comparison of the bit
// string (bit 0 of the stream sits in the most significant position).
struct Code128 {
  uint64_t hi = 0, lo = 0;
  auto operator<=>(const Code128&) const = default;
};

void set_bit(Code128& c, int p) {
  if (p < 64)
    c.hi |= uint64_t{1} << (63 - p);
  else
    c.lo |= uint64_t{1} << (127 - p);
}

bool get_bit(const Code128& c, int p) {
  if (p < 64) return (c.hi >> (63 - p)) & 1u;
  return (c.lo >> (127 - p)) & 1u;
}

// One-dimensional refinement of the (d+, d-) partition by neighbor color
// multisets. Used only to order the relabeling search, never for pruning,
// so it cannot affect which code is found.
std::vector<int> refinement_order(const OrientedGraph& g) {
  int n = g.order();
  std::vector<int> color(n);
  {
    std::map<std::pair<int, int>, int> rank;
    for (int v = 0; v < n; ++v)
      rank[{g.out_degree(v), g.in_degree(v)}] = 0;
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (int v = 0; v < n; ++v)
      color[v] = rank[{g.out_degree(v), g.in_degree(v)}];
  }
  for (int round = 0; round < n; ++round) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> outc, inc;
      g.out_neighbors(v).for_each([&](int u) { outc.push_back(color[u]); });
      g.in_neighbors(v).for_each([&](int u) { inc.push_back(color[u]); });
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      sig[v] = {color[v], std::move(outc), std::move(inc)};
    }
    std::map<Sig, int> rank;
    for (int v = 0; v < n; ++v) rank[sig[v]] = 0;
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = rank[sig[v]];
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed) break;
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  return order;
}

struct Search {
  const OrientedGraph& g;
  int n;
  std::vector<int> candidates;  // static heuristic order
  std::vector<int> pos;         // pos[t] = vertex placed at position t
  std::vector<char> used;
  Code128 cur;  // code of the prefix with all undecided entries zero
  Code128 best;
  bool have_best = false;

  explicit Search(const OrientedGraph& graph)
      : g(graph),
        n(graph.order()),
        candidates(refinement_order(graph)),
        used(n, 0) {
    pos.reserve(n);
  }

  // The zero-filled prefix code is a lower bound on every completion, so
  // once an incumbent exists, any prefix with cur >= best is dead: it can
  // tie the incumbent at most.
  void descend() {
    int t = (int)pos.size();
    if (t == n) {
      best = cur;
      have_best = true;
      return;
    }
    for (int w : candidates) {
      if (used[w]) continue;
      Code128 saved = cur;
      for (int i = 0; i < t; ++i) {
        if (g.has_arc(pos[i], w)) set_bit(cur, i * n + t);
        if (g.has_arc(w, pos[i])) set_bit(cur, t * n + i);
      }
      if (!have_best || cur < best) {
        used[w] = 1;
        pos.push_back(w);
        descend();
        pos.pop_back();
        used[w] = 0;
      }
      cur = saved;
    }
  }
};

}  // namespace

std::string canonical_code(const OrientedGraph& g, int limit) {
  if (limit > 11)
    fail(Errc::order_too_large,
         "canonical form limit " + std::to_string(limit) +
             " exceeds the 11-vertex encoding capacity");
  if (g.order() > limit)
    fail(Errc::order_too_large,
         "canonical form requested for order " + std::to_string(g.order()) +
             " with limit " + std::to_string(limit));
  int n = g.order();
  Search s(g);
  s.descend();
  Code128 code = n == 0 ? Code128{} : s.best;

  static const char* digits = "0123456789abcdef";
  std::string out;
  out.push_back(digits[(n >> 4) & 15]);
  out.push_back(digits[n & 15]);
  int bits = n * n;
  for (int q = 0; q < (bits + 3) / 4; ++q) {
    int nibble = 0;
    for (int r = 0; r < 4; ++r) {
      int p = 4 * q + r;
      nibble = nibble * 2 + (p < bits && get_bit(code, p) ? 1 : 0);
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

bool is_isomorphic(const OrientedGraph& a, const OrientedGraph& b, int limit) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  int n = a.order();
  std::vector<std::pair<int, int>> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = {a.in_degree(v), a.out_degree(v)};
    db[v] = {b.in_degree(v), b.out_degree(v)};
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a, limit) == canonical_code(b, limit);
}

}  // namespace oturan
