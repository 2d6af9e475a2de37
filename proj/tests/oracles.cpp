#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "discoef/rng.hpp"

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson on [a, b] with n (even) intervals.
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

Vector fibonacci_dir(std::int64_t i, std::int64_t n) {
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - 2.0 * (i + 0.5) / static_cast<double>(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * static_cast<double>(i);
  Vector d(3);
  d << r * std::cos(phi), r * std::sin(phi), z;
  return d;
}

}  // namespace

double mean_abs_coord_circle() {
  // |cos| is smooth on [0, pi/2], [pi/2, 3pi/2], [3pi/2, 2pi]
  auto f = [](double t) { return std::abs(std::cos(t)); };
  const double integral = simpson(f, 0.0, kPi / 2, 512) +
                          simpson(f, kPi / 2, 3 * kPi / 2, 1024) +
                          simpson(f, 3 * kPi / 2, 2 * kPi, 512);
  return integral / (2.0 * kPi);
}

double mean_abs_coord_sphere2() {
  // uniform measure in spherical coordinates: (1/2)|cos(phi)| sin(phi) d(phi)
  auto f = [](double p) { return std::abs(std::cos(p)) * std::sin(p); };
  const double integral =
      simpson(f, 0.0, kPi / 2, 1024) + simpson(f, kPi / 2, kPi, 1024);
  return 0.5 * integral;
}

Matrix brute_force_hrep(const std::vector<Vector>& generators, int dim) {
  std::vector<Vector> pts;
  pts.reserve(2 * generators.size());
  for (const Vector& g : generators) {
    pts.push_back(g);
    pts.push_back(-g);
  }
  double scale = 0.0;
  for (const Vector& p : pts) scale = std::max(scale, p.norm());
  std::vector<Vector> rows;

  if (dim == 2) {
    // every pair spanning a line with all points on one side is a facet
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Vector edge = pts[j] - pts[i];
        if (edge.norm() < 1e-12 * scale) continue;
        Vector n(2);
        n << edge(1), -edge(0);
        const double c = n.dot(pts[i]);
        if (std::abs(c) < 1e-12 * scale * n.norm()) continue;
        Vector a = (c > 0 ? n : Vector(-n)) / std::abs(c);
        bool facet = true;
        for (const Vector& p : pts) {
          if (a.dot(p) > 1.0 + 1e-9) {
            facet = false;
            break;
          }
        }
        if (facet) rows.push_back(a);
      }
    }
  } else if (dim == 3) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const Eigen::Vector3d u = pts[j].head<3>() - pts[i].head<3>();
          const Eigen::Vector3d v = pts[k].head<3>() - pts[i].head<3>();
          const Eigen::Vector3d n3 = u.cross(v);
          if (n3.norm() < 1e-12 * scale * scale) continue;
          const double c = n3.dot(pts[i].head<3>());
          if (std::abs(c) < 1e-12 * scale * n3.norm()) continue;
          const Vector a = Vector(n3) / c;  // oriented so a·p_i = 1
          bool facet = true;
          for (const Vector& p : pts) {
            if (a.dot(p) > 1.0 + 1e-9) {
              facet = false;
              break;
            }
          }
          if (facet) rows.push_back(a);
        }
      }
    }
  } else {
    throw std::invalid_argument("brute_force_hrep: dim must be 2 or 3");
  }

  if (static_cast<int>(rows.size()) < 2 * dim) {
    throw std::runtime_error("brute_force_hrep: facet search failed");
  }
  Matrix A(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) A.row(r) = rows[r].transpose();

  // self-check: every generator must lie inside or on the boundary
  for (const Vector& g : generators) {
    if (hrep_gauge(A, g) > 1.0 + 1e-6) {
      throw std::runtime_error("brute_force_hrep: self-check failed");
    }
  }
  return A;
}

double hrep_gauge(const Matrix& A, const Vector& u) {
  return (A * u).maxCoeff();
}

namespace {

struct RadialBody {
  bool polytope = false;
  Matrix hrep;   // polytope case
  Matrix shape;  // ellipsoid case

  Vector boundary_point(const Vector& u) const {
    if (polytope) return u / hrep_gauge(hrep, u);
    return u / std::sqrt(u.dot(shape * u));
  }
};

double sum_abs_dots(const discoef::VectorSet& V, const Vector& h) {
  double s = 0.0;
  for (const Vector& v : V) s += std::abs(v.dot(h));
  return s;
}

}  // namespace

double boundary_sampling_max(const discoef::Instance& inst,
                             std::int64_t n_points, std::uint64_t seed) {
  const int m = inst.dim();
  if (m != 2 && m != 3) {
    throw std::invalid_argument("boundary_sampling_max: dim must be 2 or 3");
  }
  RadialBody body;
  if (inst.body.is_polytope()) {
    body.polytope = true;
    body.hrep = brute_force_hrep(inst.body.as_polytope().generators(), m);
  } else {
    body.shape = inst.body.as_ellipsoid().shape();
  }
  const discoef::VectorSet& V = inst.vectors;

  if (m == 2) {
    // the value is symmetric under h -> -h, so half the circle suffices
    double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::int64_t i = 0; i < n_points; ++i) {
      const double t = kPi * (i + 0.5) / static_cast<double>(n_points);
      Vector u(2);
      u << std::cos(t), std::sin(t);
      best = std::max(best, sum_abs_dots(V, body.boundary_point(u)));
    }
    return best;
  }

  // m == 3: global scan, then local refinement around the best directions
  const std::int64_t n_global = (n_points * 3) / 5;
  std::vector<double> vals(n_global);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n_global; ++i) {
    vals[i] = sum_abs_dots(V, body.boundary_point(fibonacci_dir(i, n_global)));
  }

  // candidate directions: best values, kept pairwise separated
  std::vector<std::int64_t> order(n_global);
  for (std::int64_t i = 0; i < n_global; ++i) order[i] = i;
  std::partial_sort(order.begin(),
                    order.begin() + std::min<std::int64_t>(n_global, 4096),
                    order.end(),
                    [&](std::int64_t a, std::int64_t b) { return vals[a] > vals[b]; });
  constexpr int kMaxCandidates = 12;
  std::vector<Vector> cands;
  for (std::int64_t idx = 0;
       idx < std::min<std::int64_t>(n_global, 4096) &&
       static_cast<int>(cands.size()) < kMaxCandidates;
       ++idx) {
    Vector d = fibonacci_dir(order[idx], n_global);
    bool fresh = true;
    for (const Vector& c : cands) {
      if (std::acos(std::min(1.0, std::abs(c.dot(d)))) < 0.1) {
        fresh = false;
        break;
      }
    }
    if (fresh) cands.push_back(d);
  }

  double best = vals[order[0]];
  const std::int64_t n_refine = n_points - n_global;
  const int rounds = 4;
  const std::int64_t per_round =
      std::max<std::int64_t>(1, n_refine / (static_cast<std::int64_t>(cands.size()) * rounds));
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    Vector centre = cands[ci];
    double local = sum_abs_dots(V, body.boundary_point(centre));
    double radius = 0.1;
    discoef::Rng rng(discoef::split_seed(seed, ci));
    for (int round = 0; round < rounds; ++round) {
      Vector best_dir = centre;
      for (std::int64_t s = 0; s < per_round; ++s) {
        Vector d = centre;
        for (int x = 0; x < 3; ++x) d(x) += radius * rng.next_normal();
        d.normalize();
        const double val = sum_abs_dots(V, body.boundary_point(d));
        if (val > local) {
          local = val;
          best_dir = d;
        }
      }
      centre = best_dir;
      radius /= 8.0;
    }
    best = std::max(best, local);
  }
  return best;
}

double ellipsoid_boundary_support_max(const Matrix& M, const Vector& u,
                                      std::int64_t n_points) {
  if (M.rows() != 2) {
    throw std::invalid_argument("ellipsoid_boundary_support_max: dim 2 only");
  }
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t i = 0; i < n_points; ++i) {
    const double t = 2.0 * kPi * (i + 0.5) / static_cast<double>(n_points);
    Vector x(2);
    x << std::cos(t), std::sin(t);
    x /= std::sqrt(x.dot(M * x));  // radial map onto the ellipse
    best = std::max(best, std::abs(u.dot(x)));
  }
  return best;
}

double polygon_inscribed_radius(const std::vector<Vector>& generators) {
  const Matrix A = brute_force_hrep(generators, 2);
  double max_norm = 0.0;
  for (int i = 0; i < A.rows(); ++i) {
    max_norm = std::max(max_norm, A.row(i).norm());
  }
  return 1.0 / max_norm;  // facet a·x = 1 sits at distance 1/|a|
}

std::pair<double, double> diag_mvee_grid(const Vector& p1, const Vector& p2) {
  auto feasible = [&](double m1, double m2) {
    const auto q = [&](const Vector& p) {
      return p(0) * p(0) * m1 + p(1) * p(1) * m2;
    };
    return q(p1) <= 1.0 && q(p2) <= 1.0;
  };
  double lo1 = 1e-4, hi1 = 4.0, lo2 = 1e-4, hi2 = 4.0;
  double best1 = lo1, best2 = lo2, best_det = -1.0;
  for (int round = 0; round < 6; ++round) {
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const double m1 = lo1 + (hi1 - lo1) * i / n;
        const double m2 = lo2 + (hi2 - lo2) * j / n;
        if (m1 <= 0 || m2 <= 0 || !feasible(m1, m2)) continue;
        if (m1 * m2 > best_det) {
          best_det = m1 * m2;
          best1 = m1;
          best2 = m2;
        }
      }
    }
    const double w1 = (hi1 - lo1) / n, w2 = (hi2 - lo2) / n;
    lo1 = std::max(1e-6, best1 - 2 * w1);
    hi1 = best1 + 2 * w1;
    lo2 = std::max(1e-6, best2 - 2 * w2);
    hi2 = best2 + 2 * w2;
  }
  return {best1, best2};
}

}  // namespace oracle
