#include "oturan/general_matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oturan {

namespace {

// Textbook blossom-contraction matching. base[v] is the base vertex of
// the contracted blossom containing v; p[] stores the alternating-tree
// parents along unmatched edges.
struct Blossom {
  int n;
  std::vector<std::vector<int>> g;
  std::vector<int> mate, p, base;
  std::vector<char> used, flower;

  Blossom(int n_, const std::vector<std::pair<int, int>>& edges)
      : n(n_), g(n_), mate(n_, -1), p(n_, -1), base(n_), used(n_, 0),
        flower(n_, 0) {
    for (auto [a, b] : edges) {
      if (a == b) continue;
      g[a].push_back(b);
      g[b].push_back(a);
    }
    for (auto& adj : g) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  }

  int lca(int a, int b) {
    std::vector<char> on_path(n, 0);
    int cur = a;
    while (true) {
      cur = base[cur];
      on_path[cur] = 1;
      if (mate[cur] == -1) break;
      cur = p[mate[cur]];
    }
    cur = b;
    while (!on_path[base[cur]]) cur = p[mate[cur]];
    return base[cur];
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      flower[base[v]] = 1;
      flower[base[mate[v]]] = 1;
      p[v] = child;
      child = mate[v];
      v = p[mate[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
          // Odd cycle closed: contract the blossom up to the common base.
          int curbase = lca(v, to);
          std::fill(flower.begin(), flower.end(), 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (flower[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          q.push(mate[to]);
        }
      }
    }
    return -1;
  }

  void augment(int finish) {
    int v = finish;
    while (v != -1) {
      int pv = p[v], next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  std::vector<int> run() {
    for (int v = 0; v < n; ++v)
      if (mate[v] == -1) {
        int finish = find_path(v);
        if (finish != -1) augment(finish);
      }
    return mate;
  }
};

}  // namespace

std::vector<int> general_max_matching(
    int n, const std::vector<std::pair<int, int>>& edges) {
  return Blossom(n, edges).run();
}

int general_matching_size(const std::vector<int>& mate) {
  int covered = 0;
  for (int m : mate)
    if (m != -1) ++covered;
  return covered / 2;
}

}  // namespace oturan
