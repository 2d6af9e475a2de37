#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "discoef/kernels.hpp"
#include "discoef/rng.hpp"

// OpenMP implementations. Work is split into fixed-size blocks indexed by
// position, partial results land in per-block slots, and the final reduce
// runs serially in block order, so the output does not depend on the
// number of threads.

namespace discoef::kernels {

namespace {

constexpr std::int64_t kBlock = 8192;

// |u_hat · z| / ||z|| for a fresh Gaussian z ~ N(0, I_m).
double one_abs_dot(int m, Rng& rng, const Vector& u_hat, Vector& scratch) {
  double nrm2 = 0.0;
  for (int i = 0; i < m; ++i) {
    const double z = rng.next_normal();
    scratch(i) = z;
    nrm2 += z * z;
  }
  if (nrm2 <= 0.0) return 0.0;  // probability-zero degenerate draw
  const double d = u_hat.size() == 0 ? scratch(0) : u_hat.dot(scratch);
  return std::abs(d) / std::sqrt(nrm2);
}

Vector normalize_or_empty(const Vector& u) {
  if (u.size() == 0) return u;
  const double n = u.norm();
  if (n == 0.0) throw InvariantError("abs_dot_moments: zero direction");
  return u / n;
}

// Support point of K in direction u and the value sum_v |v·h| there.
double support_point_value(const VectorSet& V, const SymmetricBody& K,
                           const Matrix& ellipsoid_minv, const Vector& u,
                           Vector& h) {
  if (K.is_polytope()) {
    const auto& gens = K.as_polytope().generators();
    int best = 0;
    double best_abs = -1.0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const double a = std::abs(u.dot(gens[j]));
      if (a > best_abs) {
        best_abs = a;
        best = static_cast<int>(j);
      }
    }
    h = gens[best];
  } else {
    h = ellipsoid_minv * u;
    const double s = std::sqrt(u.dot(h));
    h /= s;
  }
  double val = 0.0;
  for (const Vector& v : V) val += std::abs(v.dot(h));
  return val;
}

std::uint32_t gray(std::uint32_t i) { return i ^ (i >> 1); }

}  // namespace

Moments abs_dot_moments(int m, std::int64_t n, std::uint64_t seed,
                        const Vector& u) {
  const Vector u_hat = normalize_or_empty(u);
  const std::int64_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> bsum(nb, 0.0), bsq(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    Vector scratch(m);
    double s = 0.0, q = 0.0;
    const std::int64_t hi = std::min(n, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < hi; ++i) {
      Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
      const double t = one_abs_dot(m, rng, u_hat, scratch);
      s += t;
      q += t * t;
    }
    bsum[b] = s;
    bsq[b] = q;
  }
  Moments mo;
  mo.n = n;
  for (std::int64_t b = 0; b < nb; ++b) {
    mo.sum += bsum[b];
    mo.sum_sq += bsq[b];
  }
  return mo;
}

Moments abs_dot_moments_serial(int m, std::int64_t n, std::uint64_t seed,
                               const Vector& u) {
  const Vector u_hat = normalize_or_empty(u);
  Vector scratch(m);
  Moments mo;
  mo.n = n;
  for (std::int64_t i = 0; i < n; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    const double t = one_abs_dot(m, rng, u_hat, scratch);
    mo.sum += t;
    mo.sum_sq += t * t;
  }
  return mo;
}

double support_point_max(const VectorSet& V, const SymmetricBody& K,
                         std::int64_t n, std::uint64_t seed) {
  if (V.dim() != K.dim()) {
    throw DimensionError("support_point_max: dimension mismatch");
  }
  if (n < 1) throw InvariantError("support_point_max: need n >= 1");
  const int m = K.dim();
  Matrix minv;
  if (!K.is_polytope()) {
    const Matrix& w = K.as_ellipsoid().inv_sqrt_shape();
    minv = w * w;
  }
  const std::int64_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> bmax(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    Vector dir(m), h(m), scratch(m);
    double best = 0.0;
    const std::int64_t hi = std::min(n, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < hi; ++i) {
      Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
      for (int d = 0; d < m; ++d) dir(d) = rng.next_normal();
      if (dir.norm() == 0.0) continue;
      best = std::max(best, support_point_value(V, K, minv, dir, h));
    }
    bmax[b] = best;
  }
  double best = 0.0;
  for (std::int64_t b = 0; b < nb; ++b) best = std::max(best, bmax[b]);
  return best;
}

double support_point_max_serial(const VectorSet& V, const SymmetricBody& K,
                                std::int64_t n, std::uint64_t seed) {
  if (V.dim() != K.dim()) {
    throw DimensionError("support_point_max: dimension mismatch");
  }
  if (n < 1) throw InvariantError("support_point_max: need n >= 1");
  const int m = K.dim();
  Matrix minv;
  if (!K.is_polytope()) {
    const Matrix& w = K.as_ellipsoid().inv_sqrt_shape();
    minv = w * w;
  }
  Vector dir(m), h(m);
  double best = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    for (int d = 0; d < m; ++d) dir(d) = rng.next_normal();
    if (dir.norm() == 0.0) continue;
    best = std::max(best, support_point_value(V, K, minv, dir, h));
  }
  return best;
}

double signed_sum_norm_max(const std::vector<Vector>& vecs) {
  const int n = static_cast<int>(vecs.size());
  if (n < 1) throw InvariantError("signed_sum_norm_max: empty input");
  if (n > tol::sign_cap) {
    throw InvariantError("signed_sum_norm_max: too many vectors for exact enumeration");
  }
  if (n == 1) return vecs[0].norm();
  const std::int64_t total = std::int64_t{1} << (n - 1);
  const std::int64_t block = std::min<std::int64_t>(total, 1024);
  const std::int64_t nb = total / block;
  std::vector<double> bmax(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::int64_t lo = b * block;
    // sign of vecs[i+1] is bit i of the Gray code of the pattern index
    const std::uint32_t g0 = gray(static_cast<std::uint32_t>(lo));
    Vector acc = vecs[0];
    for (int i = 0; i + 1 < n; ++i) {
      acc += ((g0 >> i) & 1u) ? -vecs[i + 1] : vecs[i + 1];
    }
    double best = acc.squaredNorm();
    for (std::int64_t idx = lo + 1; idx < lo + block; ++idx) {
      const int bit = std::countr_zero(static_cast<std::uint64_t>(idx));
      const bool now_neg = (gray(static_cast<std::uint32_t>(idx)) >> bit) & 1u;
      acc += (now_neg ? -2.0 : 2.0) * vecs[bit + 1];
      best = std::max(best, acc.squaredNorm());
    }
    bmax[b] = best;
  }
  double best = 0.0;
  for (std::int64_t b = 0; b < nb; ++b) best = std::max(best, bmax[b]);
  return std::sqrt(best);
}

double signed_sum_norm_max_serial(const std::vector<Vector>& vecs) {
  const int n = static_cast<int>(vecs.size());
  if (n < 1) throw InvariantError("signed_sum_norm_max: empty input");
  if (n > tol::sign_cap) {
    throw InvariantError("signed_sum_norm_max: too many vectors for exact enumeration");
  }
  const std::int64_t total = std::int64_t{1} << (n - 1);
  double best = 0.0;
  Vector acc(vecs[0].size());
  for (std::int64_t pattern = 0; pattern < total; ++pattern) {
    acc = vecs[0];
    for (int i = 0; i + 1 < n; ++i) {
      acc += ((pattern >> i) & 1) ? -vecs[i + 1] : vecs[i + 1];
    }
    best = std::max(best, acc.squaredNorm());
  }
  return std::sqrt(best);
}

CertResult support_dominated(const Ellipsoid& E, const SymmetricBody& K,
                             int n_dirs, std::uint64_t seed, double rel_slack) {
  if (E.dim() != K.dim()) {
    throw DimensionError("support_dominated: dimension mismatch");
  }
  const int m = K.dim();
  const std::int64_t nb = (n_dirs + kBlock - 1) / kBlock;
  std::vector<double> bexc(nb, -1.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    Vector dir(m);
    double worst = -1.0;
    const std::int64_t hi = std::min<std::int64_t>(n_dirs, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < hi; ++i) {
      Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
      for (int d = 0; d < m; ++d) dir(d) = rng.next_normal();
      if (dir.norm() == 0.0) continue;
      double sk = 0.0;
      if (K.is_polytope()) {
        for (const Vector& g : K.as_polytope().generators()) {
          sk = std::max(sk, std::abs(dir.dot(g)));
        }
      } else {
        sk = K.as_ellipsoid().support(dir);
      }
      const double se = E.support(dir);
      worst = std::max(worst, se / sk - 1.0);
    }
    bexc[b] = worst;
  }
  double worst = -1.0;
  for (std::int64_t b = 0; b < nb; ++b) worst = std::max(worst, bexc[b]);
  return CertResult{worst <= rel_slack, worst};
}

CertResult support_dominated_serial(const Ellipsoid& E, const SymmetricBody& K,
                                    int n_dirs, std::uint64_t seed,
                                    double rel_slack) {
  if (E.dim() != K.dim()) {
    throw DimensionError("support_dominated: dimension mismatch");
  }
  const int m = K.dim();
  Vector dir(m);
  double worst = -1.0;
  for (std::int64_t i = 0; i < n_dirs; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    for (int d = 0; d < m; ++d) dir(d) = rng.next_normal();
    if (dir.norm() == 0.0) continue;
    double sk = 0.0;
    if (K.is_polytope()) {
      for (const Vector& g : K.as_polytope().generators()) {
        sk = std::max(sk, std::abs(dir.dot(g)));
      }
    } else {
      sk = K.as_ellipsoid().support(dir);
    }
    worst = std::max(worst, E.support(dir) / sk - 1.0);
  }
  return CertResult{worst <= rel_slack, worst};
}

}  // namespace discoef::kernels
