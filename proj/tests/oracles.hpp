#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "discoef/instance.hpp"

// Test-only oracles, independent of the library's computation paths: they
// rely on quadrature, brute-force facet enumeration (m <= 3 only), and
// dense boundary sampling, never on support/denominator/MVEE routines.

namespace oracle {

using discoef::Matrix;
using discoef::Vector;

/// E[|h_1|] for h uniform on the unit circle, by composite Simpson
/// quadrature of |cos| over the angle parametrization.
double mean_abs_coord_circle();

/// E[|h_1|] for h uniform on S^2, by quadrature in spherical coordinates.
double mean_abs_coord_sphere2();

/// Brute-force H-representation of conv{±g} for dim 2 or 3: rows a with
/// a·x <= 1 describing every facet.
Matrix brute_force_hrep(const std::vector<Vector>& generators, int dim);

/// Minkowski gauge from an H-representation: max_i a_i·u.
double hrep_gauge(const Matrix& A, const Vector& u);

/// Dense boundary-sampling maximization of sum_v |v·h| over the body of the
/// instance (dim 2 or 3): a global direction scan plus local refinement,
/// n_points boundary evaluations in total. Always a lower bound on the
/// exact maximum.
double boundary_sampling_max(const discoef::Instance& inst,
                             std::int64_t n_points, std::uint64_t seed);

/// Max of |u·x| over boundary points of {x : x^T M x <= 1}, dim 2, by a
/// dense angle grid mapped through M^{-1/2}.
double ellipsoid_boundary_support_max(const Matrix& M, const Vector& u,
                                      std::int64_t n_points);

/// Radius of the largest circle centred at the origin inside conv{±g},
/// dim 2 (distance from the origin to the nearest facet).
double polygon_inscribed_radius(const std::vector<Vector>& generators);

/// Minimum-volume axis-aligned origin-centred enclosing ellipse of
/// {±p1, ±p2} by grid search over diagonal shape matrices; returns the
/// diagonal (m11, m22).
std::pair<double, double> diag_mvee_grid(const Vector& p1, const Vector& p2);

}  // namespace oracle
