#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oturan/oriented_graph.hpp"

namespace oturan {

/// Outcome of one property sweep. Violations carry the offending graphs
/// as arc-list text, so `parse_arclist` plus `violation_replays` re-fails
/// them independently of the stream that produced them. Hypothesis-hit
/// counts expose vacuous passes. Wall time is deliberately absent: the
/// report must serialize byte-identically across reruns.
struct VerifyReport {
  std::string check_id;
  long long instances = 0;
  long long hypothesis_hits = 0;
  std::vector<std::string> violations;
  uint64_t seed = 0;
  /// Set on theorem sweeps whose upper bound rests on sampling, never on
  /// exhaustion.
  std::string upper_bound_label;

  bool passed() const { return violations.empty(); }
};

/// Each unordered pair is absent with probability 1-p, otherwise
/// oriented by a fair coin. Deterministic given the seed.
OrientedGraph random_oriented(int n, double p, uint64_t seed);

struct ExtremalCheck {
  bool accepted = false;
  std::string diagnosis;  // first failed condition when rejected
};

/// Recognizer for the characterized extremal families (k = 2 or 3):
/// recovers X as the zero-in-degree vertices, then checks the window on
/// |X|, the complete X->Y / empty Y->X arc pattern, emptiness of D[X],
/// and in-degree (k-1)-regularity inside Y.
ExtremalCheck check_extremal_family(const OrientedGraph& g, int k);

/// Property sweeps over fixtures plus seeded random streams.
/// Lemma targets: "2.2", "2.3", "2.4", "2.5", "3.3-claim".
VerifyReport verify_lemma(const std::string& id, int n_lo, int n_hi,
                          uint64_t seed);

/// Construction sweeps. Targets: "1.1", "1.2" (build family members
/// across splits and Y-schemes, assert freeness, the closed-form arc
/// count, and recognizer acceptance; plus one heuristic run that must
/// not beat the closed form), "1.3-lower" (construction meets the lower
/// bound for k in [4,6]).
VerifyReport verify_theorem(const std::string& id, int n_lo, int n_hi,
                            uint64_t seed);

/// Dispatch by target name over both families above.
VerifyReport run_verification(const std::string& target, int n_lo,
                              int n_hi, uint64_t seed);

/// True when g still fails the named check; every recorded violation
/// satisfies this after an arc-list round-trip.
bool violation_replays(const std::string& check_id, const OrientedGraph& g);

}  // namespace oturan
