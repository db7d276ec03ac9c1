#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oturan/oriented_graph.hpp"

namespace oturan {

struct SearchConfig {
  std::optional<uint64_t> seed;  // mandatory for the heuristic
  int restarts = 50;
  int iterations = 2000;  // local-search steps per restart
  std::optional<double> time_limit_seconds;
  int threads = 1;
  int exact_guard = 7;  // largest order the exact search will accept
};

struct SearchStats {
  long long nodes = 0;
  long long count_prunes = 0;
  long long freeness_prunes = 0;
  long long symmetry_prunes = 0;
};

struct TuranResult {
  enum class Kind { exact, lower_bound_evidence };

  int n = 0;
  int k = 0;
  long long value = 0;
  Kind kind = Kind::exact;
  OrientedGraph witness;  // free graph with exactly `value` arcs
  SearchStats stats;
};

const char* kind_name(TuranResult::Kind k);

/// Proven maximum arc count over all order-n oriented graphs avoiding the
/// subdivided in-star with k spokes. Branch and bound over the ordered
/// pair list with arc-greedy descent, count pruning, incremental freeness
/// pruning, and an exactness-preserving symmetry cut (when two columns of
/// the decision prefix agree, their next entries must be non-increasing;
/// a label-swap argument keeps at least one representative per
/// isomorphism class). If the time limit strikes, the result degrades to
/// kind lower_bound_evidence. Throws GuardExceeded above the order guard.
TuranResult exact_turan(int n, int k, const SearchConfig& cfg = {});

/// Canonical codes of every isomorphism class attaining exact_turan(n,k),
/// sorted. Limited to n <= 6 (GuardExceeded beyond).
std::vector<std::string> enumerate_all_extremal(int n, int k);

/// Seeded local search: grow a free graph by admissible arc insertions
/// with remove-then-add perturbations, restarting from the lower-bound
/// construction under shuffled Y-schemes. The reported value never falls
/// below the best construction seen, so for n >= 3k+1 it is at least
/// turan_formula(n, k). Single-threaded and fully reproducible from the
/// seed; the witness is re-verified non-incrementally before returning.
TuranResult heuristic_turan(int n, int k, const SearchConfig& cfg);

}  // namespace oturan
