#include "discoef/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace discoef {

namespace {

void require_finite(const Vector& v, const char* where) {
  if (!v.allFinite()) {
    throw InvariantError(std::string(where) + ": non-finite entries");
  }
}

// A few ulps of slack so exact boundary points stay members at tol = 0.
constexpr double kFpSlack = 16.0 * std::numeric_limits<double>::epsilon();

}  // namespace

double support(const SymmetricBody& K, const Vector& u) {
  if (u.size() != K.dim()) {
    throw DimensionError("support: dimension mismatch");
  }
  require_finite(u, "support");
  if (K.is_polytope()) {
    double best = 0.0;
    for (const Vector& g : K.as_polytope().generators()) {
      best = std::max(best, std::abs(u.dot(g)));
    }
    return best;
  }
  return K.as_ellipsoid().support(u);
}

bool contains(const SymmetricBody& K, const Vector& x, double tol) {
  if (x.size() != K.dim()) {
    throw DimensionError("contains: dimension mismatch");
  }
  require_finite(x, "contains");
  if (tol < 0.0) throw InvariantError("contains: tol must be nonnegative");
  const double cap = (1.0 + tol) * (1.0 + kFpSlack);
  if (!K.is_polytope()) {
    return K.as_ellipsoid().quad(x) <= cap;
  }
  return detail::l1_gauge(K.as_polytope().generators(), x) <= cap;
}

SymmetricBody linear_image(const SymmetricBody& K, const Matrix& B) {
  const int m = K.dim();
  if (B.rows() != m || B.cols() != m) {
    throw DimensionError("linear_image: matrix dimension mismatch");
  }
  if (!B.allFinite()) {
    throw InvariantError("linear_image: non-finite matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(B);
  const Vector& s = svd.singularValues();
  if (s(m - 1) <= 0.0 || s(0) > tol::condition_cap * s(m - 1)) {
    throw InvariantError("linear_image: B is singular or too ill-conditioned");
  }
  if (K.is_polytope()) {
    std::vector<Vector> gens;
    gens.reserve(K.as_polytope().size());
    for (const Vector& g : K.as_polytope().generators()) {
      gens.push_back(B * g);
    }
    return SymmetricBody::polytope(m, std::move(gens));
  }
  const Matrix Binv = B.partialPivLu().inverse();
  Matrix shape = Binv.transpose() * K.as_ellipsoid().shape() * Binv;
  const Matrix shape_t = shape.transpose();
  shape = 0.5 * (shape + shape_t);
  return SymmetricBody::ellipsoid(std::move(shape));
}

namespace detail {

namespace {

// Dense two-phase primal simplex for
//   min sum(lambda) s.t. [G, -G] lambda = x, lambda >= 0.
// Bland's rule prevents cycling; an iteration cap turns pathological
// numerics into SolverError instead of a wrong answer.
class GaugeLp {
 public:
  GaugeLp(const std::vector<Vector>& gens, const Vector& x)
      : m_(static_cast<int>(x.size())),
        n_(2 * static_cast<int>(gens.size())) {
    T_.resize(m_, n_ + m_ + 1);
    T_.setZero();
    const int k = static_cast<int>(gens.size());
    for (int j = 0; j < k; ++j) {
      T_.col(j).head(m_) = gens[j];
      T_.col(k + j).head(m_) = -gens[j];
    }
    T_.col(n_ + m_).head(m_) = x;
    double scale = 1.0;
    for (int j = 0; j < k; ++j) scale = std::max(scale, gens[j].lpNorm<Eigen::Infinity>());
    scale = std::max(scale, x.lpNorm<Eigen::Infinity>());
    eps_ = 1e-11 * scale;
    for (int i = 0; i < m_; ++i) {
      if (T_(i, n_ + m_) < 0.0) T_.row(i) = -T_.row(i);
      T_(i, n_ + i) = 1.0;
    }
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  double solve() {
    run_phase(/*phase1=*/true);
    if (objective(/*phase1=*/true) > 1e-7 * (1.0 + rhs_norm())) {
      throw SolverError("gauge LP: phase 1 did not reach feasibility; result indeterminate");
    }
    drive_out_artificials();
    run_phase(/*phase1=*/false);
    return objective(/*phase1=*/false);
  }

 private:
  double rhs_norm() const { return T_.col(n_ + m_).cwiseAbs().maxCoeff(); }

  double cost(int j, bool phase1) const {
    if (phase1) return j >= n_ ? 1.0 : 0.0;
    return j < n_ ? 1.0 : 0.0;
  }

  double objective(bool phase1) const {
    double v = 0.0;
    for (int i = 0; i < m_; ++i) {
      v += cost(basis_[i], phase1) * T_(i, n_ + m_);
    }
    return v;
  }

  void compute_reduced_costs(bool phase1, Eigen::RowVectorXd& r) const {
    r.resize(n_ + m_);
    for (int j = 0; j < n_ + m_; ++j) r(j) = cost(j, phase1);
    for (int i = 0; i < m_; ++i) {
      const double cb = cost(basis_[i], phase1);
      if (cb != 0.0) r -= cb * T_.row(i).head(n_ + m_);
    }
  }

  void pivot(int row, int col, Eigen::RowVectorXd& r) {
    T_.row(row) /= T_(row, col);
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = T_(i, col);
      if (f != 0.0) T_.row(i) -= f * T_.row(row);
    }
    const double rf = r(col);
    if (rf != 0.0) r -= rf * T_.row(row).head(n_ + m_);
    basis_[row] = col;
  }

  void run_phase(bool phase1) {
    Eigen::RowVectorXd r;
    compute_reduced_costs(phase1, r);
    const long cap = 10000 + 100L * (n_ + m_);
    for (long it = 0; it < cap; ++it) {
      // Bland: smallest eligible column index
      int enter = -1;
      const int limit = phase1 ? n_ + m_ : n_;
      for (int j = 0; j < limit; ++j) {
        if (r(j) < -eps_) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;  // optimal
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double a = T_(i, enter);
        if (a > eps_) {
          const double ratio = T_(i, n_ + m_) / a;
          if (leave < 0 || ratio < best_ratio * (1.0 - 1e-12)) {
            best_ratio = ratio;
            leave = i;
          } else if (ratio <= best_ratio * (1.0 + 1e-12) + 1e-300 &&
                     basis_[i] < basis_[leave]) {
            // Bland tie-break on the leaving variable
            best_ratio = std::min(best_ratio, ratio);
            leave = i;
          }
        }
      }
      if (leave < 0) {
        throw SolverError("gauge LP: unbounded pivot; result indeterminate");
      }
      pivot(leave, enter, r);
      // negative rounding debris on the rhs breaks ratio tests; clamp
      for (int i = 0; i < m_; ++i) {
        if (T_(i, n_ + m_) < 0.0 && T_(i, n_ + m_) > -eps_) T_(i, n_ + m_) = 0.0;
      }
    }
    throw SolverError("gauge LP: iteration cap exceeded; result indeterminate");
  }

  void drive_out_artificials() {
    Eigen::RowVectorXd r;  // unused cost row for these degenerate pivots
    r.setZero(n_ + m_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(T_(i, j)) > eps_) {
          pivot(i, j, r);
          break;
        }
      }
      // no pivot found: the row is redundant; its artificial stays at zero
    }
  }

  int m_;
  int n_;
  double eps_;
  Matrix T_;
  std::vector<int> basis_;
};

}  // namespace

double l1_gauge(const std::vector<Vector>& generators, const Vector& x) {
  if (generators.empty()) {
    throw InvariantError("l1_gauge: empty generator list");
  }
  const double xn = x.lpNorm<Eigen::Infinity>();
  if (xn == 0.0) return 0.0;
  GaugeLp lp(generators, x);
  return lp.solve();
}

Matrix sym_sqrt(const Matrix& M) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  if (es.info() != Eigen::Success) {
    throw SolverError("sym_sqrt: eigendecomposition failed");
  }
  const Vector& ev = es.eigenvalues();
  if (ev(0) <= 0.0 || ev(0) < tol::eig_ratio_floor * ev(ev.size() - 1)) {
    throw InvariantError("sym_sqrt: matrix not safely positive definite");
  }
  return es.operatorSqrt();
}

Matrix sym_inv_sqrt(const Matrix& M) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  if (es.info() != Eigen::Success) {
    throw SolverError("sym_inv_sqrt: eigendecomposition failed");
  }
  const Vector& ev = es.eigenvalues();
  if (ev(0) <= 0.0 || ev(0) < tol::eig_ratio_floor * ev(ev.size() - 1)) {
    throw InvariantError("sym_inv_sqrt: matrix not safely positive definite");
  }
  return es.operatorInverseSqrt();
}

}  // namespace detail

}  // namespace discoef
