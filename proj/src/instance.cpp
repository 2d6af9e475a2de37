#include "discoef/instance.hpp"

#include <Eigen/SVD>

#include "discoef/rng.hpp"

namespace discoef {

namespace {

Vector normal_vector(int m, Rng& rng) {
  Vector v(m);
  for (int i = 0; i < m; ++i) v(i) = rng.next_normal();
  return v;
}

bool spans(const std::vector<Vector>& gens, int m) {
  Matrix G(m, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) G.col(j) = gens[j];
  Eigen::JacobiSVD<Matrix> svd(G);
  const Vector& s = svd.singularValues();
  return s(m - 1) > 1e-10 * s(0);
}

}  // namespace

Instance gen_instance(int m, int k, int n, BodyKind kind, std::uint64_t seed) {
  if (m < 2 || n < 1 || k < 1 || (kind == BodyKind::vpolytope && k < m)) {
    throw InvariantError("gen_instance: impossible parameters");
  }
  Rng rng(seed);

  auto make_body = [&]() -> SymmetricBody {
    if (kind == BodyKind::vpolytope) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Vector> gens;
        gens.reserve(k);
        for (int j = 0; j < k; ++j) gens.push_back(normal_vector(m, rng));
        if (spans(gens, m)) {
          return SymmetricBody::polytope(m, std::move(gens));
        }
      }
      throw SolverError("gen_instance: could not draw spanning generators");
    }
    Matrix C(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) C(i, j) = rng.next_normal();
    }
    Matrix shape = C.transpose() * C + 1e-3 * Matrix::Identity(m, m);
    return SymmetricBody::ellipsoid(std::move(shape));
  };
  SymmetricBody body = make_body();

  std::vector<Vector> vecs;
  vecs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vector v = normal_vector(m, rng);
    while (v.norm() == 0.0) v = normal_vector(m, rng);
    vecs.push_back(std::move(v));
  }
  return Instance{std::move(body), VectorSet(m, std::move(vecs)), std::nullopt};
}

Instance cross_polytope_witness(int m) {
  if (m < 2) throw InvariantError("cross_polytope_witness: m must be at least 2");
  std::vector<Vector> axes;
  axes.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vector e = Vector::Zero(m);
    e(i) = 1.0;
    axes.push_back(std::move(e));
  }
  SymmetricBody body = SymmetricBody::polytope(m, axes);
  return Instance{std::move(body), VectorSet(m, std::move(axes)),
                  "cross-polytope-witness-m" + std::to_string(m)};
}

}  // namespace discoef
