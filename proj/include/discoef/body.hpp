#pragma once

#include <Eigen/Dense>
#include <utility>
#include <variant>
#include <vector>

#include "discoef/errors.hpp"

namespace discoef {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

namespace tol {
/// Construction-time invariant checks.
inline constexpr double construction = 1e-12;
/// Operation post-conditions, relative.
inline constexpr double post_rel = 1e-10;
/// lambda_min/lambda_max floor for matrix inverse / square root.
inline constexpr double eig_ratio_floor = 1e-10;
/// Condition-number cap for linear images.
inline constexpr double condition_cap = 1e10;
/// Sign-pattern enumeration cap (2^(cap-1) patterns).
inline constexpr int sign_cap = 22;
}  // namespace tol

/// Finite list of nonzero vectors of one dimension.
class VectorSet {
 public:
  VectorSet(int dim, std::vector<Vector> vectors);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const Vector& operator[](int i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

 private:
  int dim_;
  std::vector<Vector> vectors_;
};

/// conv{±g_1, ..., ±g_k}: symmetric and origin-centred by construction.
/// Generators must span R^m (full-dimensional body).
class VPolytope {
 public:
  VPolytope(int dim, std::vector<Vector> generators);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const std::vector<Vector>& generators() const { return generators_; }

 private:
  int dim_;
  std::vector<Vector> generators_;
};

/// {x : x^T M x <= 1} with M symmetric positive definite. The symmetric
/// square root and inverse square root of M are precomputed so instances
/// are immutable and safe to share across threads.
class Ellipsoid {
 public:
  explicit Ellipsoid(Matrix shape);

  int dim() const { return static_cast<int>(shape_.rows()); }
  const Matrix& shape() const { return shape_; }
  /// M^{1/2}, symmetric positive definite.
  const Matrix& sqrt_shape() const { return sqrt_; }
  /// M^{-1/2}, symmetric positive definite.
  const Matrix& inv_sqrt_shape() const { return inv_sqrt_; }

  /// x^T M x
  double quad(const Vector& x) const;
  /// sqrt(u^T M^{-1} u), the support value in direction u.
  double support(const Vector& u) const;

 private:
  Matrix shape_;
  Matrix sqrt_;
  Matrix inv_sqrt_;
};

/// A symmetric origin-centred convex body: V-polytope or ellipsoid.
class SymmetricBody {
 public:
  explicit SymmetricBody(VPolytope polytope) : body_(std::move(polytope)) {}
  explicit SymmetricBody(Ellipsoid ellipsoid) : body_(std::move(ellipsoid)) {}

  static SymmetricBody polytope(int dim, std::vector<Vector> generators) {
    return SymmetricBody(VPolytope(dim, std::move(generators)));
  }
  static SymmetricBody ellipsoid(Matrix shape) {
    return SymmetricBody(Ellipsoid(std::move(shape)));
  }

  int dim() const;
  bool is_polytope() const { return std::holds_alternative<VPolytope>(body_); }
  const VPolytope& as_polytope() const;
  const Ellipsoid& as_ellipsoid() const;

 private:
  std::variant<VPolytope, Ellipsoid> body_;
};

}  // namespace discoef
