#pragma once

#include <cstdint>

#include "discoef/instance.hpp"
#include "discoef/ratio.hpp"

namespace discoef {

struct SearchConfig {
  int m = 2;
  int k = 4;         // generators per random restart
  int n = 4;         // vectors per random restart
  int restarts = 10;
  int steps = 200;
  double step_size = 0.1;
  std::uint64_t seed = 1;
};

struct SearchResult {
  Instance best;
  RatioReport report;
  double max_ratio_over_m = 0.0;
};

/// Random-restart hill climbing for high-ratio polytope instances: perturb
/// generators and vectors by Gaussian steps, keep a step iff the ratio
/// increases. Restart 0 starts from the cross-polytope witness, so the best
/// ratio never falls below m. Throws SolverError if the best ratio exceeds
/// ratio_bound(m), which would indicate an implementation bug.
SearchResult search_max_ratio(const SearchConfig& config);

}  // namespace discoef
