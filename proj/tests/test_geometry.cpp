#include <doctest.h>

#include <cmath>
#include <vector>

#include "discoef/geometry.hpp"
#include "discoef/instance.hpp"
#include "discoef/rng.hpp"
#include "discoef/sphere.hpp"
#include "oracles.hpp"

using namespace discoef;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector unit(int m, int i) {
  Vector v = Vector::Zero(m);
  v(i) = 1.0;
  return v;
}

SymmetricBody cross_polytope(int m) {
  std::vector<Vector> gens;
  for (int i = 0; i < m; ++i) gens.push_back(unit(m, i));
  return SymmetricBody::polytope(m, std::move(gens));
}

SymmetricBody unit_ball(int m) {
  return SymmetricBody::ellipsoid(Matrix::Identity(m, m));
}

}  // namespace

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(VectorSet(2, {Vector::Zero(2)}), InvariantError);
  CHECK_THROWS_AS(VectorSet(2, {}), InvariantError);
  CHECK_THROWS_AS(VectorSet(2, {vec2(1, 0), Vector::Zero(3)}), DimensionError);

  CHECK_THROWS_AS(SymmetricBody::polytope(2, {vec2(1, 0)}), RankError);
  CHECK_THROWS_AS(SymmetricBody::polytope(2, {vec2(1, 0), vec2(2, 0)}), RankError);
  CHECK_THROWS_AS(SymmetricBody::polytope(2, {vec2(1, 0), Vector::Zero(2)}),
                  InvariantError);

  Matrix asym(2, 2);
  asym << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(SymmetricBody::ellipsoid(asym), InvariantError);
  Matrix indef(2, 2);
  indef << 1, 0, 0, -1;
  CHECK_THROWS_AS(SymmetricBody::ellipsoid(indef), InvariantError);
  Matrix illcond(2, 2);
  illcond << 1, 0, 0, 1e-12;
  CHECK_THROWS_AS(SymmetricBody::ellipsoid(illcond), InvariantError);

  const double nan = std::nan("");
  CHECK_THROWS_AS(SymmetricBody::polytope(2, {vec2(1, 0), vec2(0, nan)}),
                  InvariantError);
}

TEST_CASE("support of the cross-polytope along an axis") {
  CHECK(support(cross_polytope(3), unit(3, 0)) == 1.0);
}

TEST_CASE("support of the unit ball is the norm") {
  CHECK(support(unit_ball(2), vec2(3, 4)) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("support of an axis-aligned ellipsoid") {
  Matrix M(2, 2);
  M << 1, 0, 0, 4;
  const SymmetricBody K = SymmetricBody::ellipsoid(M);
  const double s = support(K, vec2(0, 1));
  CHECK(s == doctest::Approx(0.5).epsilon(1e-13));
  // dense maximization of u·h over sampled boundary points agrees
  const double sampled = oracle::ellipsoid_boundary_support_max(M, vec2(0, 1), 1000000);
  CHECK(sampled == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(sampled <= s * (1 + 1e-12));
}

TEST_CASE("support rejects dimension mismatch") {
  CHECK_THROWS_AS(support(unit_ball(2), Vector::Zero(3)), DimensionError);
}

TEST_CASE("membership: boundary point of the ball at tol 0") {
  CHECK(contains(unit_ball(2), vec2(0.6, 0.8), 0.0));
  CHECK_FALSE(contains(unit_ball(2), vec2(0.6, 0.81), 0.0));
}

TEST_CASE("membership: cross-polytope in 2d") {
  CHECK_FALSE(contains(cross_polytope(2), vec2(0.6, 0.6), 0.0));
  CHECK(contains(cross_polytope(2), vec2(0.5, 0.5), 0.0));
}

TEST_CASE("membership: rotated square contains (1,0)") {
  const SymmetricBody K = SymmetricBody::polytope(2, {vec2(1, 1), vec2(1, -1)});
  CHECK(contains(K, vec2(1, 0), 0.0));  // (1,0) = (g1 + g2)/2
  CHECK_FALSE(contains(K, vec2(1.01, 0), 0.0));
  // independent check through the brute-force facet oracle
  const Matrix A = oracle::brute_force_hrep({vec2(1, 1), vec2(1, -1)}, 2);
  CHECK(oracle::hrep_gauge(A, vec2(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("membership rejects negative tolerance") {
  CHECK_THROWS_AS(contains(unit_ball(2), vec2(0, 0), -1.0), InvariantError);
}

TEST_CASE("linear image of the ball by 2I") {
  const SymmetricBody im = linear_image(unit_ball(2), 2.0 * Matrix::Identity(2, 2));
  CHECK_FALSE(im.is_polytope());
  CHECK((im.as_ellipsoid().shape() - 0.25 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("linear image rotates polytope generators") {
  const double c = std::sqrt(2.0) / 2.0;
  Matrix R(2, 2);
  R << c, -c, c, c;
  const SymmetricBody im = linear_image(cross_polytope(2), R);
  REQUIRE(im.is_polytope());
  const auto& gens = im.as_polytope().generators();
  CHECK((gens[0] - vec2(c, c)).norm() < 1e-15);
  CHECK((gens[1] - vec2(-c, c)).norm() < 1e-15);
}

TEST_CASE("mapping an ellipsoid through its sqrt gives the unit ball") {
  Rng rng(5);
  Matrix C(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C(i, j) = rng.next_normal();
  const Matrix M = C.transpose() * C + 0.5 * Matrix::Identity(3, 3);
  const SymmetricBody K = SymmetricBody::ellipsoid(M);
  const SymmetricBody im = linear_image(K, detail::sym_sqrt(M));
  const SymmetricBody ball = unit_ball(3);
  for (int t = 0; t < 100; ++t) {
    const Vector u = sample_sphere(3, rng);
    CHECK(support(im, u) == doctest::Approx(support(ball, u)).epsilon(1e-10));
  }
}

TEST_CASE("linear image rejects singular matrices") {
  Matrix B = Matrix::Zero(2, 2);
  B(0, 0) = 1.0;
  CHECK_THROWS_AS(linear_image(unit_ball(2), B), InvariantError);
}

TEST_CASE("support function properties on random bodies") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 3);
    const BodyKind kind =
        (trial % 2) ? BodyKind::vpolytope : BodyKind::ellipsoid;
    const Instance inst =
        gen_instance(m, m + 2, 1, kind, split_seed(1234, trial));
    const SymmetricBody& K = inst.body;
    for (int t = 0; t < 8; ++t) {
      const Vector u = sample_sphere(m, rng);
      const Vector w = sample_sphere(m, rng);
      const double su = support(K, u);

      // symmetry is exact
      CHECK(support(K, Vector(-u)) == su);

      // positive homogeneity
      for (double c : {0.0, 0.5, 2.0, 7.25}) {
        CHECK(support(K, Vector(c * u)) ==
              doctest::Approx(c * su).epsilon(1e-10));
      }

      // subadditivity
      CHECK(support(K, Vector(u + w)) <= su + support(K, w) + 1e-10);
    }
  }
}

TEST_CASE("membership implies support domination") {
  Rng rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 2);
    const BodyKind kind =
        (trial % 2) ? BodyKind::vpolytope : BodyKind::ellipsoid;
    const Instance inst =
        gen_instance(m, m + 1, 1, kind, split_seed(777, trial));
    const SymmetricBody& K = inst.body;

    // a safe interior point: shrink a convex combination of generators or
    // a boundary point of the ellipsoid
    Vector x(m);
    if (K.is_polytope()) {
      x = Vector::Zero(m);
      const auto& gens = K.as_polytope().generators();
      for (const Vector& g : gens) x += g / static_cast<double>(gens.size());
      x *= 0.9;
    } else {
      const Vector u = sample_sphere(m, rng);
      x = 0.9 * (K.as_ellipsoid().inv_sqrt_shape() * u);
    }
    REQUIRE(contains(K, x, 0.0));
    for (int t = 0; t < 10; ++t) {
      const Vector u = sample_sphere(m, rng);
      CHECK(u.dot(x) <= support(K, u) + 1e-10);
    }
  }
}

TEST_CASE("linear image is consistent with the support function") {
  Rng rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 3);
    const BodyKind kind =
        (trial % 2) ? BodyKind::vpolytope : BodyKind::ellipsoid;
    const Instance inst =
        gen_instance(m, m + 2, 1, kind, split_seed(888, trial));
    Matrix B(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) B(i, j) = rng.next_normal();
    B += 3.0 * Matrix::Identity(m, m);  // keep it comfortably invertible
    const SymmetricBody im = linear_image(inst.body, B);
    for (int t = 0; t < 10; ++t) {
      const Vector u = sample_sphere(m, rng);
      const double lhs = support(im, u);
      const double rhs = support(inst.body, Vector(B.transpose() * u));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}
