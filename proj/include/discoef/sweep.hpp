#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "discoef/instance.hpp"
#include "discoef/john.hpp"
#include "discoef/ratio.hpp"

namespace discoef {

struct SweepConfig {
  std::int64_t trials = 1000;
  std::vector<int> dims = {2, 3, 4, 5, 6, 7, 8};
  std::vector<BodyKind> kinds = {BodyKind::vpolytope, BodyKind::ellipsoid};
  std::uint64_t seed = 1;
  double eps = 1e-6;
  int max_vectors = 12;
  /// Run the inequality-chain verification on polytope trials.
  bool check_chain = true;
  /// Replace trial 0 by the cross-polytope witness (first dim in dims).
  bool inject_witness = false;
};

struct TrialFailure {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;  // derived seed that replays the trial
  std::string message;
};

struct SweepSummary {
  std::int64_t trials = 0;
  std::int64_t violations_eq1 = 0;
  std::int64_t violations_chain = 0;
  double max_ratio_over_m = 0.0;
  double max_ratio_over_bound = 0.0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  std::vector<TrialFailure> failures;
};

/// Per-instance verification: the ratio bound always, and for polytope
/// bodies the full inequality chain (John certificates plus both links).
struct TrialResult {
  RatioReport report;
  bool eq1_ok = false;
  bool chain_ok = false;
  bool chain_checked = false;
};

TrialResult check_instance(const Instance& inst, double eps);

/// Randomized verification sweep. Trials run in parallel with per-trial
/// derived seeds; aggregation is order-independent, so the summary is
/// deterministic for a fixed seed regardless of thread count.
SweepSummary verify_sweep(const SweepConfig& config);

}  // namespace discoef
