#include "discoef/ratio.hpp"

#include <cmath>
#include <numbers>

#include "discoef/geometry.hpp"
#include "discoef/kernels.hpp"
#include "discoef/sphere.hpp"

namespace discoef {

namespace {

void require_compatible(const VectorSet& V, const SymmetricBody& K) {
  if (V.dim() != K.dim()) {
    throw DimensionError("ratio: vector set and body dimensions differ");
  }
}

}  // namespace

double numerator(const VectorSet& V, const SymmetricBody& K) {
  require_compatible(V, K);
  double sum = 0.0;
  for (const Vector& v : V) sum += support(K, v);
  return sum;
}

double denominator(const VectorSet& V, const SymmetricBody& K) {
  require_compatible(V, K);
  if (K.is_polytope()) {
    // a convex function attains its polytope maximum at a vertex, and the
    // vertices of conv{±g} are among the ±generators
    double best = 0.0;
    for (const Vector& g : K.as_polytope().generators()) {
      double total = 0.0;
      for (const Vector& v : V) total += std::abs(v.dot(g));
      best = std::max(best, total);
    }
    return best;
  }
  if (V.size() > tol::sign_cap) {
    throw InvariantError(
        "denominator: |V| exceeds the sign-enumeration cap for ellipsoid "
        "bodies; use denominator_mc_lower for a Monte-Carlo lower bound");
  }
  const Matrix& W = K.as_ellipsoid().inv_sqrt_shape();
  std::vector<Vector> mapped;
  mapped.reserve(V.size());
  for (const Vector& v : V) mapped.push_back(W * v);
  return kernels::signed_sum_norm_max(mapped);
}

double denominator_mc_lower(const VectorSet& V, const SymmetricBody& K,
                            std::int64_t n_samples, std::uint64_t rng_seed) {
  require_compatible(V, K);
  if (n_samples < 1) {
    throw InvariantError("denominator_mc_lower: need n_samples >= 1");
  }
  return kernels::support_point_max(V, K, n_samples, rng_seed);
}

double ratio_bound(int m) {
  if (m < 2) throw InvariantError("ratio_bound: m must be at least 2");
  const double md = static_cast<double>(m);
  return std::sqrt(std::numbers::pi / (2.0 * (1.0 - 1.0 / md))) * md;
}

double coefficient_bound(int m) { return 2.0 * ratio_bound(m); }

RatioReport ratio(const VectorSet& V, const SymmetricBody& K) {
  require_compatible(V, K);
  RatioReport r;
  r.m = K.dim();
  r.n_vectors = V.size();
  r.numerator = numerator(V, K);
  r.denominator = denominator(V, K);
  r.ratio = r.numerator / r.denominator;
  r.coefficient = 2.0 * r.ratio;
  r.bound = ratio_bound(r.m);
  r.coefficient_bound = 2.0 * r.bound;
  r.slack = r.bound - r.ratio;
  return r;
}

ChainReport chain_check(const VectorSet& V, const SymmetricBody& K,
                        const JohnResult& john) {
  require_compatible(V, K);
  if (!K.is_polytope()) {
    throw InvariantError("chain_check: body must be a V-polytope");
  }
  if (john.dim != K.dim()) {
    throw DimensionError("chain_check: John result dimension differs");
  }
  if (V.size() > tol::sign_cap) {
    throw InvariantError("chain_check: |V| exceeds the sign-enumeration cap");
  }
  const int m = K.dim();

  // coordinates in which the inscribed ellipsoid becomes the unit ball:
  // w = A^{-1} v, and sup over the ball of |w·h| is ||w||
  const Matrix& inv_factor = john.inner.inv_sqrt_shape();
  std::vector<Vector> mapped;
  mapped.reserve(V.size());
  double norm_sum = 0.0;
  for (const Vector& v : V) {
    mapped.push_back(inv_factor * v);
    norm_sum += mapped.back().norm();
  }
  const double sphere_den = kernels::signed_sum_norm_max(mapped);
  const double sphere_ratio = norm_sum / sphere_den;

  const RatioReport base = ratio(V, K);

  ChainReport c;
  c.lhs_ratio = base.ratio;
  c.sphere_ratio = sphere_ratio;
  c.transformed_norm_sum = norm_sum;
  c.eps_used = john.eps;
  c.sqrt_m_bound_ok =
      base.ratio <= std::sqrt(m * (1.0 + john.eps)) * sphere_ratio + 1e-8;
  c.baum_link_ok =
      sphere_den >= (c_m(m) / std::sqrt(static_cast<double>(m))) * norm_sum - 1e-10;
  return c;
}

}  // namespace discoef
