#pragma once

#include <cstdint>

#include "discoef/body.hpp"
#include "discoef/john.hpp"

namespace discoef {

/// The support-sum ratio of a vector set V against a symmetric body K:
///   numerator   = sum_v sup_{h in K} |v·h|
///   denominator = sup_{h in K} sum_v |v·h|
/// together with the limiting disagreement coefficient (twice the ratio)
/// and the dimension-only upper bound sqrt(pi/(2(1-1/m)))·m.
struct RatioReport {
  int m = 0;
  int n_vectors = 0;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  double coefficient = 0.0;
  double bound = 0.0;
  double coefficient_bound = 0.0;
  double slack = 0.0;
};

/// Verification of the two inequality links that prove the ratio bound:
/// (a) ratio over K <= sqrt(m(1+eps)) * ratio over the unit sphere with
///     the vectors mapped by A^{-1}, and
/// (b) the sphere denominator is at least (c_m/sqrt(m)) * sum ||A^{-1}v||.
struct ChainReport {
  double lhs_ratio = 0.0;
  double sphere_ratio = 0.0;
  bool sqrt_m_bound_ok = false;
  bool baum_link_ok = false;
  double transformed_norm_sum = 0.0;
  double eps_used = 0.0;
};

double numerator(const VectorSet& V, const SymmetricBody& K);

/// Exact convex maximization: vertex maximum for polytopes, sign-pattern
/// enumeration for ellipsoids (|V| capped at tol::sign_cap).
double denominator(const VectorSet& V, const SymmetricBody& K);

/// Monte-Carlo lower bound on the denominator: max of sum_v |v·h| over
/// support points of K in n_samples random directions. Never exceeds the
/// exact denominator.
double denominator_mc_lower(const VectorSet& V, const SymmetricBody& K,
                            std::int64_t n_samples, std::uint64_t rng_seed);

RatioReport ratio(const VectorSet& V, const SymmetricBody& K);

/// sqrt(pi/(2(1-1/m)))·m, m >= 2.
double ratio_bound(int m);
/// 2·ratio_bound(m); at most 2·sqrt(pi)·m.
double coefficient_bound(int m);

ChainReport chain_check(const VectorSet& V, const SymmetricBody& K,
                        const JohnResult& john);

}  // namespace discoef
