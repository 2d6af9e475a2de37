#pragma once

#include "discoef/body.hpp"

namespace discoef {

/// Support value h_K(u) = sup{u·h : h in K}. For a symmetric body this
/// equals sup|u·h|: a polytope attains it at a generator, an ellipsoid in
/// closed form.
double support(const SymmetricBody& K, const Vector& u);

/// Membership of x in (1+tol)·K. Ellipsoids check the quadratic form;
/// V-polytopes solve a small linear program for the gauge of x. A solve
/// that does not converge throws SolverError rather than answering.
bool contains(const SymmetricBody& K, const Vector& x, double tol);

/// Image {Bx : x in K} under an invertible matrix B.
SymmetricBody linear_image(const SymmetricBody& K, const Matrix& B);

namespace detail {

/// Minkowski gauge of x w.r.t. conv{±g}: min sum|c_j| s.t. sum c_j g_j = x,
/// solved as an LP by dense two-phase simplex with Bland's rule.
double l1_gauge(const std::vector<Vector>& generators, const Vector& x);

/// Symmetric PSD square root; rejects eigenvalue ratios below the floor.
Matrix sym_sqrt(const Matrix& M);
/// Symmetric PSD inverse square root; same guard.
Matrix sym_inv_sqrt(const Matrix& M);

}  // namespace detail

}  // namespace discoef
