#include "discoef/john.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>

#include "discoef/geometry.hpp"
#include "discoef/kernels.hpp"

namespace discoef {

namespace {

// Leverage values kappa_j = p_j^T H^{-1} p_j for H = P diag(w) P^T.
// Returns false if H is numerically singular.
bool refresh_state(const Matrix& P, const Vector& w, Matrix& Z, Vector& kappa) {
  const int m = static_cast<int>(P.rows());
  Matrix H = P * w.asDiagonal() * P.transpose();
  Eigen::LLT<Matrix> llt(H);
  if (llt.info() != Eigen::Success) return false;
  Z = llt.solve(Matrix::Identity(m, m));
  const Matrix ZP = Z * P;
  kappa = (P.array() * ZP.array()).colwise().sum().matrix().transpose();
  return kappa.allFinite();
}

}  // namespace

Ellipsoid mvee_symmetric(const VectorSet& points, double eps, long max_iter) {
  const int m = points.dim();
  const int k = points.size();
  if (m < 2) throw InvariantError("mvee_symmetric: dimension must be at least 2");
  if (eps <= 0.0) throw InvariantError("mvee_symmetric: eps must be positive");
  if (k < m) throw RankError("mvee_symmetric: points cannot span R^m");
  if (max_iter < 0) max_iter = 100L * k * m;

  Matrix P(m, k);
  for (int j = 0; j < k; ++j) P.col(j) = points[j];

  Vector w = Vector::Constant(k, 1.0 / k);
  Matrix Z(m, m);
  Vector kappa(k);
  if (!refresh_state(P, w, Z, kappa)) {
    throw RankError("mvee_symmetric: points are rank-deficient");
  }

  const double target = m * (1.0 + eps);
  constexpr long kRefreshEvery = 512;
  double gap = std::numeric_limits<double>::infinity();
  long it = 0;
  for (; it < max_iter; ++it) {
    int jmax = 0;
    const double kmax = kappa.maxCoeff(&jmax);
    gap = kmax / m - 1.0;
    if (kmax <= target) {
      // verify on a fresh factorization before accepting
      if (!refresh_state(P, w, Z, kappa)) {
        throw SolverError("mvee_symmetric: lost positive definiteness");
      }
      int jv = 0;
      if (kappa.maxCoeff(&jv) <= target) break;
      continue;
    }

    // candidate away step: the active point with the smallest leverage
    int jmin = -1;
    double kmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      if (w(j) > 0.0 && kappa(j) < kmin) {
        kmin = kappa(j);
        jmin = j;
      }
    }

    int j = jmax;
    double beta = (kmax - m) / (m * (kmax - 1.0));
    if (jmin >= 0 && w(jmin) < 1.0 && (m - kmin) > (kmax - m)) {
      // decreasing the least useful weight helps more than increasing the worst
      const double clamp = -w(jmin) / (1.0 - w(jmin));
      double beta_away =
          kmin > 1.0 ? std::max((kmin - m) / (m * (kmin - 1.0)), clamp) : clamp;
      const double denom_away = (1.0 - beta_away) + beta_away * kappa(jmin);
      if (denom_away > 1e-9) {
        j = jmin;
        beta = beta_away;
      }
    }

    const double denom = (1.0 - beta) + beta * kappa(j);
    if (!(denom > 0.0) || beta >= 1.0) {
      if (!refresh_state(P, w, Z, kappa)) {
        throw SolverError("mvee_symmetric: lost positive definiteness");
      }
      continue;
    }

    const Vector zp = Z * P.col(j);
    const Vector pz = P.transpose() * zp;  // p_i^T Z p_j, old Z
    kappa = (kappa - (beta / denom) * pz.cwiseProduct(pz)) / (1.0 - beta);
    Z = (Z - (beta / denom) * (zp * zp.transpose())) / (1.0 - beta);
    w *= (1.0 - beta);
    w(j) += beta;
    w = w.cwiseMax(0.0);

    if ((it + 1) % kRefreshEvery == 0) {
      if (!refresh_state(P, w, Z, kappa)) {
        throw SolverError("mvee_symmetric: lost positive definiteness");
      }
    }
  }
  if (it >= max_iter) {
    throw MveeNotConverged("mvee_symmetric: iteration cap exceeded", gap, it);
  }

  // M_out = H^{-1} / (m(1+eps)); the stopping rule makes p^T M_out p <= 1
  // for every input point.
  Matrix shape = Z / target;
  const Matrix shape_t = shape.transpose();
  shape = 0.5 * (shape + shape_t);
  return Ellipsoid(std::move(shape));
}

JohnResult john_inscribed(const SymmetricBody& K, double eps, int n_dirs,
                          std::uint64_t rng_seed) {
  if (!K.is_polytope()) {
    throw InvariantError("john_inscribed: body must be a V-polytope");
  }
  if (n_dirs < 1) throw InvariantError("john_inscribed: n_dirs must be positive");
  const VPolytope& P = K.as_polytope();
  const int m = P.dim();

  Ellipsoid enclosing = mvee_symmetric(VectorSet(m, P.generators()), eps);
  // shrink by 1/sqrt(m(1+eps)): shape matrix scales by m(1+eps)
  const double scale = m * (1.0 + eps);
  Ellipsoid inner(Matrix(enclosing.shape() * scale));

  bool outer_ok = true;
  const double outer_cap = scale * (1.0 + 1e-10);
  for (const Vector& g : P.generators()) {
    if (inner.quad(g) > outer_cap) {
      outer_ok = false;
      break;
    }
  }

  const kernels::CertResult cert =
      kernels::support_dominated(inner, K, n_dirs, rng_seed, 1e-8);

  Matrix factor = detail::sym_sqrt(inner.shape());
  return JohnResult{std::move(inner), std::move(factor), m,     eps,
                    outer_ok,         cert.ok,           n_dirs};
}

}  // namespace discoef
