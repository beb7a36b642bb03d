#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "spherebound/basis.hpp"
#include "spherebound/polynomial.hpp"

namespace spherebound {

enum class Solver {
  // zonal for linear objectives, dense otherwise
  automatic,
  // Cholesky reduction of the monomial pencil (A_f, B), block by parity class
  dense,
  // exact reduction of a linear objective c0 + c.x to the Jacobi matrix of
  // the Gegenbauer weight (1 - t^2)^{(n-3)/2}
  zonal,
};

struct BoundOptions {
  Solver solver = Solver::automatic;
};

// Condition number of B above which results carry a warning.
inline constexpr double kConditionWarningThreshold = 1e12;
// Eigenvalue gap under which the minimizer is reported as non-unique.
inline constexpr double kMultiplicityGap = 1e-10;

struct BoundResult {
  std::size_t n = 0;
  int r = 0;
  double value = 0.0;
  // Generalized eigenvector over `basis`, normalized so that c^T B c = 1
  // (c^T A_q c = 1 for the rational bound); largest-magnitude entry positive.
  std::vector<double> coeffs;
  BasisSpec basis;
  bool condition_warning = false;
  std::optional<double> condition_number;
  bool multiplicity_warning = false;
  Solver solver_used = Solver::dense;
};

// Min of int f h over SOS densities h of degree <= 2r with int h = 1
// (normalized surface measure), as the smallest generalized eigenvalue of the
// pencil over sphere_basis(n, r).
BoundResult upper_bound(const Polynomial& f, std::size_t n, int r,
                        const BoundOptions& options = {});

// Same hierarchy for min p/q with the constraint int q h = 1; q must be
// positive on the sphere.
BoundResult rational_upper_bound(const Polynomial& p, const Polynomial& q, std::size_t n,
                                 int r);

struct Density {
  Polynomial root;  // sum_alpha coeffs_alpha x^alpha
  Polynomial h;     // root^2
  int r = 0;
};

Density extract_density(const BoundResult& result);

struct GridPoint {
  double theta;
  double phi;
  double h;
};

struct DensityGrid {
  int resolution = 0;
  std::vector<GridPoint> rows;  // theta-major

  const GridPoint& at(int i, int j) const { return rows[i * (resolution + 1) + j]; }
};

// h on the (resolution + 1)^2 grid theta = pi i / res, phi = 2 pi j / res,
// with x = (sin theta sin phi, sin theta cos phi, cos theta). n must be 3.
DensityGrid density_grid(const Density& density, std::size_t n, int resolution);

// Interior grid points (0 < theta < pi) that are >= all eight neighbours and
// > at least one, with phi treated as periodic (the phi = 2 pi column is a
// copy of phi = 0 and is skipped).
std::vector<GridPoint> grid_local_maxima(const DensityGrid& grid);

Point spherical_point(double theta, double phi);

// header theta,phi,h; %.12g
void write_density_csv(std::ostream& os, const DensityGrid& grid);

// {n, r, value, basis_size, condition_warning, coeffs[]}
nlohmann::json to_json(const BoundResult& result);

}  // namespace spherebound
