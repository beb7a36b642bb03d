#pragma once

#include <vector>

#include <Eigen/Core>

#include "spherebound/quadrature.hpp"

namespace spherebound {

// Exponents of the Jacobi weight (1 - x)^a (1 + x)^b on [-1, 1].
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;

  static JacobiParams gegenbauer(double lambda) { return {lambda - 0.5, lambda - 0.5}; }
};

struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples rows i and i + 1

  std::size_t size() const { return diag.size(); }
};

// Eigenvalues in ascending order; column j of `vectors` is the unit
// eigenvector of values[j] (present only when requested).
struct TridiagonalEigen {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};

// Implicit-shift QL on a symmetric tridiagonal matrix.
TridiagonalEigen solve_tridiagonal(const TridiagonalMatrix& t, bool want_vectors = true);

// Symmetric Jacobi matrix of the orthonormal Jacobi polynomials
// p_0..p_{d-1}; its eigenvalues are the roots of P^{a,b}_d.
TridiagonalMatrix jacobi_matrix(const JacobiParams& params, int d);

double smallest_root(const JacobiParams& params, int d);

// Roots of C^lambda_d in ascending order.
std::vector<double> gegenbauer_roots(double lambda, int d);

// Gauss-Gegenbauer rule for the weight (1 - x^2)^{lambda - 1/2}; weights
// sum to ball_constant(1, lambda) and the rule is exact through degree
// 2d - 1 (Golub-Welsch).
QuadratureRule gauss_rule(double lambda, int d);

}  // namespace spherebound
