#pragma once

#include <cstdint>

#include "discoef/body.hpp"

namespace discoef {

/// Inscribed ellipsoid E = {x : x^T A^T A x <= 1} of a symmetric V-polytope
/// K, with certificates for E ⊆ K ⊆ sqrt(m(1+eps))·E.
struct JohnResult {
  Ellipsoid inner;
  /// Symmetric PSD factor A with A^T A equal to the shape matrix of E.
  Matrix factor;
  int dim = 0;
  double eps = 0.0;
  /// Exact certificate: every generator g satisfies
  /// g^T M_E g <= m(1+eps)(1+1e-10). Because x -> sqrt(x^T M_E x) is a
  /// norm, checking generators certifies the whole polytope.
  bool outer_ok = false;
  /// Sampled certificate: support(E,u) <= support(K,u)(1+1e-8) on n_dirs
  /// uniformly random directions.
  bool inner_ok = false;
  int n_dirs = 0;
};

/// Minimum-volume origin-centred ellipsoid enclosing {±p : p in points}.
/// Coordinate ascent on the dual D-optimal design problem, with away/drop
/// steps; stops when max_j p_j^T H^{-1} p_j <= m(1+eps) where
/// H = sum_j w_j p_j p_j^T. max_iter < 0 selects the default 100*k*m cap.
Ellipsoid mvee_symmetric(const VectorSet& points, double eps,
                         long max_iter = -1);

/// John ellipsoid of a symmetric V-polytope: the enclosing ellipsoid of the
/// generators shrunk by 1/sqrt(m(1+eps)), plus containment certificates.
JohnResult john_inscribed(const SymmetricBody& K, double eps = 1e-6,
                          int n_dirs = 10000, std::uint64_t rng_seed = 0);

}  // namespace discoef
