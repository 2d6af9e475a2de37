#pragma once

#include <cstdint>
#include <vector>

#include "discoef/body.hpp"
#include "discoef/rng.hpp"

namespace discoef {

/// A seeded Monte-Carlo estimate; bit-identical for fixed (n, seed).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

/// c_m = sqrt((2/pi)(1 - 1/m)): lower-bounds sqrt(m)·E[|u·h|] for h uniform
/// on the unit sphere and any unit u. Increasing in m, limit sqrt(2/pi).
double c_m(int m);

/// Uniform sample on S_{m-1}: a normalized vector of independent standard
/// normals.
Vector sample_sphere(int m, Rng& rng);

/// Monte-Carlo estimate of E[|e_1·h|] for h uniform on S_{m-1}.
McEstimate expected_abs_dot(int m, std::int64_t n, std::uint64_t seed);

/// expected_abs_dot mean >= c_m/sqrt(m) - 5·std_error.
bool baum_check(int m, std::int64_t n, std::uint64_t seed);

struct BaumRow {
  int m = 0;
  McEstimate estimate;
  double threshold = 0.0;  // c_m/sqrt(m)
  bool ok = false;
};

/// baum_check for every m in {2, ..., m_max}, one row per dimension.
std::vector<BaumRow> baum_sweep(int m_max, std::int64_t n, std::uint64_t seed);

}  // namespace discoef
