#include "oturan/turan_search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <memory>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oturan/canonical.hpp"
#include "oturan/constructions.hpp"
#include "oturan/errors.hpp"
#include "oturan/rng.hpp"
#include "oturan/subdivision.hpp"

namespace oturan {

namespace {

using Clock = std::chrono::steady_clock;

// Decision variables are the unordered pairs {i, j}, i < j, visited in
// lexicographic order. Each takes one of three values: 2 = arc i->j,
// 1 = arc j->i, 0 = no arc. Branching tries 2, 1, 0 in that order so the
// first leaf reached is arc-greedy.
int pair_index(int n, int r, int c) {
  return r * n - r * (r + 1) / 2 + (c - r - 1);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> ps;
  ps.reserve((size_t)n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  return ps;
}

struct DfsDriver {
  int n;
  int k;
  std::vector<std::pair<int, int>> pairs;
  GraphBuilder gb;
  std::vector<signed char> trit;  // per pair index; -1 while undecided

  // Optimization mode: improve on best (local, optionally mirrored into a
  // shared atomic for parallel splits).
  long long best = -1;
  std::atomic<long long>* shared_best = nullptr;
  OrientedGraph witness;
  bool improved = false;

  // Collection mode: record every completion with exactly target arcs.
  bool collecting = false;
  long long target = -1;
  std::set<std::string>* codes = nullptr;

  // Find-first mode: stop at the first completion with target arcs.
  bool find_first = false;
  bool found = false;

  SearchStats stats;
  std::optional<Clock::time_point> deadline;
  bool timed_out = false;

  explicit DfsDriver(int n_, int k_)
      : n(n_), k(k_), pairs(all_pairs(n_)), gb(n_),
        trit(pairs.size(), (signed char)-1), witness(gb.view()) {}

  long long best_known() const {
    long long b = best;
    if (shared_best)
      b = std::max(b, shared_best->load(std::memory_order_relaxed));
    return b;
  }

  void publish(long long value) {
    if (!shared_best) return;
    long long cur = shared_best->load(std::memory_order_relaxed);
    while (cur < value && !shared_best->compare_exchange_weak(
                              cur, value, std::memory_order_relaxed)) {
    }
  }

  bool columns_agree(int i, int j) const {
    for (int r = 0; r < i; ++r)
      if (trit[pair_index(n, r, j - 1)] != trit[pair_index(n, r, j)])
        return false;
    return true;
  }

  void run(size_t p, long long arcs) {
    if (timed_out || found) return;
    ++stats.nodes;
    if (deadline && (stats.nodes & 1023) == 0 &&
        Clock::now() > *deadline) {
      timed_out = true;
      return;
    }
    long long remaining = (long long)(pairs.size() - p);
    if (collecting || find_first) {
      if (arcs > target || arcs + remaining < target) {
        ++stats.count_prunes;
        return;
      }
    } else if (arcs + remaining <= best_known()) {
      ++stats.count_prunes;
      return;
    }
    if (p == pairs.size()) {
      if (collecting) {
        codes->insert(canonical_code(gb.view()));
      } else if (find_first) {
        witness = gb.view();
        found = true;
      } else {
        best = arcs;
        witness = gb.view();
        improved = true;
        publish(arcs);
      }
      return;
    }
    auto [i, j] = pairs[p];
    int tmax = 2;
    // Symmetry cut: while the decision prefix cannot tell columns j-1 and
    // j apart, force their row-i entries to be non-increasing. Swapping
    // the two labels strictly raises the decision word of any violating
    // completion, so the word-maximal labeling of every isomorphism class
    // survives the cut.
    if (j - 1 > i && columns_agree(i, j))
      tmax = trit[pair_index(n, i, j - 1)];
    for (int t = 2; t >= 0; --t) {
      if (t > tmax) {
        ++stats.symmetry_prunes;
        continue;
      }
      int head = -1;
      if (t == 2) {
        gb.add_arc(i, j);
        head = j;
      } else if (t == 1) {
        gb.add_arc(j, i);
        head = i;
      }
      if (head >= 0 && n >= 2 * k + 1 &&
          creates_subdivision(gb.view(), k, head)) {
        ++stats.freeness_prunes;
        if (t == 2)
          gb.remove_arc(i, j);
        else
          gb.remove_arc(j, i);
        continue;
      }
      trit[(size_t)pair_index(n, i, j)] = (signed char)t;
      run(p + 1, arcs + (t ? 1 : 0));
      trit[(size_t)pair_index(n, i, j)] = -1;
      if (t == 2)
        gb.remove_arc(i, j);
      else if (t == 1)
        gb.remove_arc(j, i);
      if (timed_out || found) return;
    }
  }
};

OrientedGraph transitive_tournament(int n) {
  GraphBuilder gb(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gb.add_arc(i, j);
  return std::move(gb).take();
}

// Arc-greedy incumbent: sweep the pairs once, keeping every forward arc
// that does not complete a forbidden copy.
OrientedGraph greedy_incumbent(int n, int k) {
  GraphBuilder gb(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      gb.add_arc(i, j);
      if (n >= 2 * k + 1 && creates_subdivision(gb.view(), k, j))
        gb.remove_arc(i, j);
    }
  return std::move(gb).take();
}

OrientedGraph starting_incumbent(int n, int k) {
  OrientedGraph g = greedy_incumbent(n, k);
  if (n >= 3 * k + 1) {
    ConstructionParams p;
    p.n = n;
    p.k = k;
    OrientedGraph c = construct_lower(p);
    if (c.arc_count() > g.arc_count()) return c;
  }
  return g;
}

void check_search_domain(int n, int k) {
  if (n < 1 || k < 1)
    fail(Errc::domain_error, "search needs n >= 1 and k >= 1");
}

std::optional<Clock::time_point> make_deadline(const SearchConfig& cfg) {
  if (!cfg.time_limit_seconds) return std::nullopt;
  auto dt = std::chrono::duration<double>(*cfg.time_limit_seconds);
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(dt);
}

// Deterministic witness recovery for the parallel split: a plain serial
// scan that stops at the first free completion with exactly `value`
// arcs. Cheap at the guarded orders.
OrientedGraph find_witness_with(int n, int k, long long value) {
  DfsDriver d(n, k);
  d.find_first = true;
  d.target = value;
  d.run(0, 0);
  assert(d.found);
  return d.witness;
}

}  // namespace

const char* kind_name(TuranResult::Kind k) {
  switch (k) {
    case TuranResult::Kind::exact:
      return "exact";
    case TuranResult::Kind::lower_bound_evidence:
      return "lower-bound-evidence";
  }
  return "unknown";
}

TuranResult exact_turan(int n, int k, const SearchConfig& cfg) {
  check_search_domain(n, k);
  if (n > cfg.exact_guard)
    fail(Errc::guard_exceeded,
         "exact search limited to n <= " + std::to_string(cfg.exact_guard) +
             ", got n = " + std::to_string(n));

  TuranResult res;
  res.n = n;
  res.k = k;

  if (n <= 2 * k) {
    // Too few vertices for any copy: every tournament qualifies.
    res.value = (long long)n * (n - 1) / 2;
    res.kind = TuranResult::Kind::exact;
    res.witness = transitive_tournament(n);
    return res;
  }

  OrientedGraph incumbent = starting_incumbent(n, k);
  auto deadline = make_deadline(cfg);

  if (cfg.threads > 1 && n >= 3) {
    std::atomic<long long> shared{(long long)incumbent.arc_count()};
    // Split on the first two decisions; symmetry forces t1 <= t0 there.
    struct Task {
      int t0;
      int t1;
    };
    std::vector<Task> tasks;
    for (int t0 = 2; t0 >= 0; --t0)
      for (int t1 = t0; t1 >= 0; --t1) tasks.push_back({t0, t1});

    std::vector<DfsDriver*> drivers(tasks.size(), nullptr);
    std::vector<std::unique_ptr<DfsDriver>> storage;
    for (size_t i = 0; i < tasks.size(); ++i) {
      auto d = std::make_unique<DfsDriver>(n, k);
      d->best = (long long)incumbent.arc_count();
      d->shared_best = &shared;
      d->deadline = deadline;
      drivers[i] = d.get();
      storage.push_back(std::move(d));
    }

    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        DfsDriver& d = *drivers[i];
        long long arcs = 0;
        bool viable = true;
        auto place = [&](size_t p, int t) {
          auto [a, b] = d.pairs[p];
          int u = t == 2 ? a : b;
          int v = t == 2 ? b : a;
          if (t != 0) {
            d.gb.add_arc(u, v);
            if (n >= 2 * k + 1 && creates_subdivision(d.gb.view(), k, v)) {
              viable = false;
              return;
            }
            ++arcs;
          }
          d.trit[pair_index(n, a, b)] = (signed char)t;
        };
        place(0, tasks[i].t0);
        if (viable) place(1, tasks[i].t1);
        if (viable) d.run(2, arcs);
      }
    };
    int nthreads = std::min<int>(cfg.threads, (int)tasks.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    bool timed_out = false;
    for (auto& d : storage) {
      timed_out = timed_out || d->timed_out;
      res.stats.nodes += d->stats.nodes;
      res.stats.count_prunes += d->stats.count_prunes;
      res.stats.freeness_prunes += d->stats.freeness_prunes;
      res.stats.symmetry_prunes += d->stats.symmetry_prunes;
    }
    res.value = shared.load();
    res.kind = timed_out ? TuranResult::Kind::lower_bound_evidence
                         : TuranResult::Kind::exact;
    res.witness = res.value == (long long)incumbent.arc_count()
                      ? incumbent
                      : find_witness_with(n, k, res.value);
    return res;
  }

  DfsDriver d(n, k);
  d.best = (long long)incumbent.arc_count();
  d.witness = incumbent;
  d.deadline = deadline;
  d.run(0, 0);
  res.value = d.best;
  res.kind = d.timed_out ? TuranResult::Kind::lower_bound_evidence
                         : TuranResult::Kind::exact;
  res.witness = d.witness;
  res.stats = d.stats;
  return res;
}

std::vector<std::string> enumerate_all_extremal(int n, int k) {
  check_search_domain(n, k);
  if (n > 6)
    fail(Errc::guard_exceeded,
         "extremal enumeration limited to n <= 6, got n = " +
             std::to_string(n));
  TuranResult opt = exact_turan(n, k);
  std::set<std::string> codes;
  DfsDriver d(n, k);
  d.collecting = true;
  d.target = opt.value;
  d.codes = &codes;
  d.run(0, 0);
  return std::vector<std::string>(codes.begin(), codes.end());
}

namespace {

// One probe of the insertion move: propose a uniform ordered pair and
// keep the arc when it is placeable and harmless.
bool try_insert(GraphBuilder& gb, int n, int k, Rng& rng) {
  int a = rng.below_int(n);
  int b = rng.below_int(n);
  if (a == b || !gb.can_add(a, b)) return false;
  gb.add_arc(a, b);
  if (n >= 2 * k + 1 && creates_subdivision(gb.view(), k, b)) {
    gb.remove_arc(a, b);
    return false;
  }
  return true;
}

// Restart 0 uses the canonical scheme; later restarts draw a random
// block partition of Y (every block still >= 2k-1).
YScheme random_scheme(int y_size, int k, Rng& rng) {
  std::vector<int> blocks;
  int rem = y_size;
  int floor_block = 2 * k - 1;
  while (rem >= 2 * floor_block) {
    int extra = rng.below_int(rem - 2 * floor_block + 1);
    blocks.push_back(floor_block + extra);
    rem -= blocks.back();
  }
  blocks.push_back(rem);
  return YScheme::cycles(std::move(blocks));
}

GraphBuilder restart_graph(int n, int k, int restart, Rng& rng) {
  if (n >= 3 * k + 1) {
    ConstructionParams p;
    p.n = n;
    p.k = k;
    if (restart > 0) {
      int split = (n - k + 1) / 2;
      p.y_scheme = random_scheme(n - split, k, rng);
    }
    return GraphBuilder(construct_lower(p));
  }
  GraphBuilder gb(n);
  for (int probe = 0; probe < 2 * n * n; ++probe) try_insert(gb, n, k, rng);
  return gb;
}

}  // namespace

TuranResult heuristic_turan(int n, int k, const SearchConfig& cfg) {
  check_search_domain(n, k);
  if (!cfg.seed)
    fail(Errc::domain_error, "heuristic search requires an explicit seed");

  auto deadline = make_deadline(cfg);
  auto expired = [&] { return deadline && Clock::now() > *deadline; };

  TuranResult res;
  res.n = n;
  res.k = k;
  res.kind = TuranResult::Kind::lower_bound_evidence;
  res.value = -1;

  int restarts = std::max(1, cfg.restarts);
  for (int r = 0; r < restarts && !expired(); ++r) {
    Rng rng(derive_seed(*cfg.seed, (uint64_t)r));
    GraphBuilder gb = restart_graph(n, k, r, rng);
    long long cur = (long long)gb.view().arc_count();
    auto consider = [&] {
      if (cur > res.value) {
        res.value = cur;
        res.witness = gb.view();
      }
    };
    consider();
    for (int it = 0; it < cfg.iterations; ++it) {
      if ((it & 63) == 0 && expired()) break;
      if (cur > 0 && rng.unit() < 0.25) {
        // Perturb: drop one random arc, then refill greedily. The best
        // graph so far is kept aside, so a bad trade costs nothing.
        int a = -1, b = -1;
        for (int probe = 0; probe < 64; ++probe) {
          int x = rng.below_int(n);
          int y = rng.below_int(n);
          if (x != y && gb.view().has_arc(x, y)) {
            a = x;
            b = y;
            break;
          }
        }
        if (a < 0) continue;
        gb.remove_arc(a, b);
        --cur;
        ++res.stats.nodes;
        for (int probe = 0; probe < 4 * n; ++probe)
          if (try_insert(gb, n, k, rng)) {
            ++cur;
            ++res.stats.nodes;
          }
      } else {
        for (int probe = 0; probe < 16; ++probe)
          if (try_insert(gb, n, k, rng)) {
            ++cur;
            ++res.stats.nodes;
            break;
          }
      }
      consider();
    }
  }

  if (res.value < 0) {
    res.value = 0;
    res.witness = std::move(GraphBuilder(n)).take();
  }
  if (!is_free(res.witness, k))
    fail(Errc::domain_error,
         "internal inconsistency: heuristic witness rejected by the full "
         "detector");
  return res;
}

}  // namespace oturan
