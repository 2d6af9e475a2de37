#include "discoef/body.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace discoef {

namespace {

void require_finite(const Vector& v, const char* where) {
  if (!v.allFinite()) {
    throw InvariantError(std::string(where) + ": non-finite entries");
  }
}

}  // namespace

VectorSet::VectorSet(int dim, std::vector<Vector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 1) throw InvariantError("VectorSet: dimension must be positive");
  if (vectors_.empty()) {
    throw InvariantError("VectorSet: need at least one vector");
  }
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != dim_) {
      throw DimensionError("VectorSet: vector dimension mismatch");
    }
    require_finite(v, "VectorSet");
    if (v.norm() == 0.0) {
      throw InvariantError("VectorSet: zero vector rejected");
    }
  }
}

VPolytope::VPolytope(int dim, std::vector<Vector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 2) throw InvariantError("VPolytope: dimension must be at least 2");
  if (static_cast<int>(generators_.size()) < dim_) {
    throw RankError("VPolytope: need at least dim generators");
  }
  Matrix G(dim_, generators_.size());
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    const Vector& g = generators_[j];
    if (static_cast<int>(g.size()) != dim_) {
      throw DimensionError("VPolytope: generator dimension mismatch");
    }
    require_finite(g, "VPolytope");
    if (g.norm() == 0.0) {
      throw InvariantError("VPolytope: zero generator rejected");
    }
    G.col(j) = g;
  }
  Eigen::JacobiSVD<Matrix> svd(G);
  const Vector& s = svd.singularValues();
  if (s(dim_ - 1) <= tol::construction * s(0)) {
    throw RankError("VPolytope: generators are rank-deficient");
  }
}

Ellipsoid::Ellipsoid(Matrix shape) : shape_(std::move(shape)) {
  if (shape_.rows() != shape_.cols()) {
    throw InvariantError("Ellipsoid: shape matrix must be square");
  }
  if (shape_.rows() < 2) {
    throw InvariantError("Ellipsoid: dimension must be at least 2");
  }
  if (!shape_.allFinite()) {
    throw InvariantError("Ellipsoid: non-finite shape matrix");
  }
  const double scale = std::max(1.0, shape_.cwiseAbs().maxCoeff());
  const Matrix shape_t = shape_.transpose();
  if ((shape_ - shape_t).cwiseAbs().maxCoeff() > tol::construction * scale) {
    throw InvariantError("Ellipsoid: shape matrix is not symmetric");
  }
  shape_ = 0.5 * (shape_ + shape_t);
  Eigen::SelfAdjointEigenSolver<Matrix> es(shape_);
  if (es.info() != Eigen::Success) {
    throw InvariantError("Ellipsoid: eigendecomposition failed");
  }
  const Vector& ev = es.eigenvalues();
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  if (lo <= 0.0) {
    throw InvariantError("Ellipsoid: shape matrix is not positive definite");
  }
  if (lo < tol::eig_ratio_floor * hi) {
    throw InvariantError("Ellipsoid: shape matrix is too ill-conditioned");
  }
  sqrt_ = es.operatorSqrt();
  inv_sqrt_ = es.operatorInverseSqrt();
}

double Ellipsoid::quad(const Vector& x) const {
  if (x.size() != shape_.rows()) {
    throw DimensionError("Ellipsoid::quad: dimension mismatch");
  }
  require_finite(x, "Ellipsoid::quad");
  return x.dot(shape_ * x);
}

double Ellipsoid::support(const Vector& u) const {
  if (u.size() != shape_.rows()) {
    throw DimensionError("Ellipsoid::support: dimension mismatch");
  }
  require_finite(u, "Ellipsoid::support");
  return (inv_sqrt_ * u).norm();
}

int SymmetricBody::dim() const {
  return is_polytope() ? as_polytope().dim() : as_ellipsoid().dim();
}

const VPolytope& SymmetricBody::as_polytope() const {
  if (!is_polytope()) {
    throw InvariantError("SymmetricBody: not a V-polytope");
  }
  return std::get<VPolytope>(body_);
}

const Ellipsoid& SymmetricBody::as_ellipsoid() const {
  if (is_polytope()) {
    throw InvariantError("SymmetricBody: not an ellipsoid");
  }
  return std::get<Ellipsoid>(body_);
}

}  // namespace discoef
