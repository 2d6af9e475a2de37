#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "discoef/body.hpp"

namespace discoef {

enum class BodyKind { vpolytope, ellipsoid };

/// One (V, K) problem: a vector set against a symmetric body.
struct Instance {
  SymmetricBody body;
  VectorSet vectors;
  std::optional<std::string> label;

  int dim() const { return body.dim(); }
};

/// Random instance, deterministic in the seed. Polytope generators and
/// query vectors are standard normal (redrawn on rank deficiency);
/// ellipsoid shapes are C^T C + 1e-3·I with normal C.
Instance gen_instance(int m, int k, int n, BodyKind kind, std::uint64_t seed);

/// conv{±e_1, ..., ±e_m} with vectors {e_1, ..., e_m}: the witness whose
/// ratio equals m exactly.
Instance cross_polytope_witness(int m);

}  // namespace discoef
