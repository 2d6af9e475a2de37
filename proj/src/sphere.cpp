#include "discoef/sphere.hpp"

#include <cmath>
#include <numbers>

#include "discoef/kernels.hpp"

namespace discoef {

double c_m(int m) {
  if (m < 2) throw InvariantError("c_m: m must be at least 2");
  const double md = static_cast<double>(m);
  return std::sqrt((2.0 / std::numbers::pi) * (1.0 - 1.0 / md));
}

Vector sample_sphere(int m, Rng& rng) {
  if (m < 2) throw InvariantError("sample_sphere: m must be at least 2");
  Vector h(m);
  for (;;) {
    for (int i = 0; i < m; ++i) h(i) = rng.next_normal();
    const double n = h.norm();
    if (n > 0.0) {
      h /= n;
      return h;
    }
    // all-zero raw draw: resample
  }
}

McEstimate expected_abs_dot(int m, std::int64_t n, std::uint64_t seed) {
  if (m < 2) throw InvariantError("expected_abs_dot: m must be at least 2");
  if (n < 1000) throw InvariantError("expected_abs_dot: need n >= 1000");
  const kernels::Moments mo = kernels::abs_dot_moments(m, n, seed);
  McEstimate e;
  e.n = n;
  e.seed = seed;
  e.mean = mo.sum / static_cast<double>(n);
  const double var =
      std::max(0.0, (mo.sum_sq - n * e.mean * e.mean) / static_cast<double>(n - 1));
  e.std_error = std::sqrt(var / static_cast<double>(n));
  return e;
}

bool baum_check(int m, std::int64_t n, std::uint64_t seed) {
  const McEstimate e = expected_abs_dot(m, n, seed);
  const double threshold = c_m(m) / std::sqrt(static_cast<double>(m));
  return e.mean >= threshold - 5.0 * e.std_error;
}

std::vector<BaumRow> baum_sweep(int m_max, std::int64_t n, std::uint64_t seed) {
  if (m_max < 2) throw InvariantError("baum_sweep: m_max must be at least 2");
  std::vector<BaumRow> rows;
  rows.reserve(m_max - 1);
  for (int m = 2; m <= m_max; ++m) {
    BaumRow row;
    row.m = m;
    row.estimate = expected_abs_dot(m, n, split_seed(seed, m));
    row.threshold = c_m(m) / std::sqrt(static_cast<double>(m));
    row.ok = row.estimate.mean >= row.threshold - 5.0 * row.estimate.std_error;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace discoef
