#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "spherebound/moments.hpp"
#include "spherebound/polynomial.hpp"

namespace spherebound {

using Real = long double;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Monomials x^alpha with |alpha| <= r and alpha_n <= 1, in GradedLexLess
// order. They form a basis of the polynomials of degree <= r restricted to
// the sphere.
struct BasisSpec {
  std::size_t n = 0;
  int r = 0;
  std::vector<MultiIndex> elements;

  std::size_t size() const { return elements.size(); }
  // Position of alpha in `elements`, or size() when absent.
  std::size_t index_of(const MultiIndex& alpha) const;
};

BasisSpec sphere_basis(std::size_t n, int r);

// #{alpha' in N^{n-1} : |alpha'| <= r} + #{... <= r - 1}
std::size_t sphere_basis_size(std::size_t n, int r);

// B[a, b] = normalized moment of x^a x^b.
Matrix gram_matrix(const BasisSpec& basis, const MomentOracle& oracle);

// A[a, b] = normalized moment of f x^a x^b.
Matrix localized_matrix(const Polynomial& f, const BasisSpec& basis,
                        const MomentOracle& oracle);

// A single entry of the localized matrix, for block-wise assembly.
Real localized_entry(const Polynomial& f, const MultiIndex& a, const MultiIndex& b,
                     const MomentOracle& oracle);

struct Pencil {
  Matrix a;
  Matrix b;
  BasisSpec basis;
  Polynomial f;
};

Pencil make_pencil(const Polynomial& f, const BasisSpec& basis);

// Row-major plain text, one row per line, %.17g.
void write_matrix(std::ostream& os, const Matrix& m);

}  // namespace spherebound
