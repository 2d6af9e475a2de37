#include "discoef/sweep.hpp"

#include <chrono>
#include <cmath>
#include <exception>

#include "discoef/rng.hpp"

namespace discoef {

TrialResult check_instance(const Instance& inst, double eps) {
  TrialResult out;
  out.report = ratio(inst.vectors, inst.body);
  out.eq1_ok = out.report.ratio <= out.report.bound;
  if (inst.body.is_polytope()) {
    const JohnResult jr = john_inscribed(inst.body, eps, /*n_dirs=*/256,
                                         /*rng_seed=*/split_seed(0xd15c, 0));
    const ChainReport chain = chain_check(inst.vectors, inst.body, jr);
    out.chain_ok = chain.sqrt_m_bound_ok && chain.baum_link_ok && jr.outer_ok &&
                   jr.inner_ok;
    out.chain_checked = true;
  }
  return out;
}

SweepSummary verify_sweep(const SweepConfig& config) {
  if (config.trials < 1) throw InvariantError("verify_sweep: need trials >= 1");
  if (config.dims.empty()) throw InvariantError("verify_sweep: no dimensions");
  if (config.kinds.empty()) throw InvariantError("verify_sweep: no body kinds");
  for (int m : config.dims) {
    if (m < 2) throw InvariantError("verify_sweep: dimensions must be >= 2");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t trials = config.trials;

  struct Slot {
    bool failed = false;
    bool eq1_viol = false;
    bool chain_viol = false;
    double ratio_over_m = 0.0;
    double ratio_over_bound = 0.0;
    std::string message;
    std::uint64_t seed = 0;
  };
  std::vector<Slot> slots(trials);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < trials; ++t) {
    Slot& slot = slots[t];
    const std::uint64_t trial_seed = split_seed(config.seed, t);
    slot.seed = trial_seed;
    try {
      Rng pick(trial_seed);
      const int m = config.dims[pick.next_u64() % config.dims.size()];
      const BodyKind kind = config.kinds[pick.next_u64() % config.kinds.size()];
      const int k = m + static_cast<int>(pick.next_u64() % 5);  // m .. m+4
      const int n = 1 + static_cast<int>(pick.next_u64() %
                                         static_cast<std::uint64_t>(config.max_vectors));
      Instance inst = (config.inject_witness && t == 0)
                          ? cross_polytope_witness(config.dims.front())
                          : gen_instance(m, k, n, kind, split_seed(trial_seed, 1));

      TrialResult res;
      if (config.check_chain) {
        res = check_instance(inst, config.eps);
      } else {
        res.report = ratio(inst.vectors, inst.body);
        res.eq1_ok = res.report.ratio <= res.report.bound;
      }
      slot.eq1_viol = !res.eq1_ok;
      slot.chain_viol = res.chain_checked && !res.chain_ok;
      slot.ratio_over_m = res.report.ratio / res.report.m;
      slot.ratio_over_bound = res.report.ratio / res.report.bound;
    } catch (const std::exception& ex) {
      slot.failed = true;
      slot.message = ex.what();
    }
  }

  SweepSummary s;
  s.trials = trials;
  s.seed = config.seed;
  for (std::int64_t t = 0; t < trials; ++t) {
    const Slot& slot = slots[t];
    if (slot.failed) {
      s.failures.push_back(TrialFailure{t, slot.seed, slot.message});
      continue;
    }
    s.violations_eq1 += slot.eq1_viol ? 1 : 0;
    s.violations_chain += slot.chain_viol ? 1 : 0;
    s.max_ratio_over_m = std::max(s.max_ratio_over_m, slot.ratio_over_m);
    s.max_ratio_over_bound = std::max(s.max_ratio_over_bound, slot.ratio_over_bound);
  }
  s.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace discoef
