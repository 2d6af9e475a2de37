#pragma once

#include <cstdint>
#include <vector>

#include "discoef/body.hpp"

// Data-parallel inner loops, OpenMP-parallelized over fixed-size blocks so
// the result is identical for any thread count. Each kernel keeps a plain
// serial reference twin (*_serial) used by the tests and the benchmark.

namespace discoef::kernels {

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t n = 0;
};

/// First two moments of |u·h| over n uniform sphere samples; sample i draws
/// from split_seed(seed, i). Empty u means e_1; otherwise u is normalized.
Moments abs_dot_moments(int m, std::int64_t n, std::uint64_t seed,
                        const Vector& u = Vector());
Moments abs_dot_moments_serial(int m, std::int64_t n, std::uint64_t seed,
                               const Vector& u = Vector());

/// Max of sum_v |v·h| over support points of K in n sampled directions.
double support_point_max(const VectorSet& V, const SymmetricBody& K,
                         std::int64_t n, std::uint64_t seed);
double support_point_max_serial(const VectorSet& V, const SymmetricBody& K,
                                std::int64_t n, std::uint64_t seed);

/// Max over sign patterns s in {±1}^n, s_0 = +1, of ||sum_i s_i u_i||.
/// Gray-code enumeration of 2^(n-1) patterns; n capped at tol::sign_cap.
double signed_sum_norm_max(const std::vector<Vector>& vecs);
double signed_sum_norm_max_serial(const std::vector<Vector>& vecs);

struct CertResult {
  bool ok = false;
  /// max over directions of support(E,u)/support(K,u) - 1
  double max_excess = 0.0;
};

/// Checks support(E,u) <= support(K,u)·(1+rel_slack) on n_dirs sampled
/// directions (a sampled certificate of E ⊆ K).
CertResult support_dominated(const Ellipsoid& E, const SymmetricBody& K,
                             int n_dirs, std::uint64_t seed, double rel_slack);
CertResult support_dominated_serial(const Ellipsoid& E, const SymmetricBody& K,
                                    int n_dirs, std::uint64_t seed,
                                    double rel_slack);

}  // namespace discoef::kernels
