#pragma once

#include <cstddef>

#include "spherebound/polynomial.hpp"

namespace spherebound {

// Moments against the normalized surface measure d(sigma) / sigma_{n-1} on
// S^{n-1}. Every moment is computed from the Gamma-ratio closed form in log
// space, at long double precision.
class MomentOracle {
 public:
  explicit MomentOracle(std::size_t n);

  std::size_t dimension() const { return n_; }

  long double moment(const MultiIndex& alpha) const;
  long double integrate(const Polynomial& p) const;

 private:
  std::size_t n_;
  long double log_gamma_half_n_;
};

// sigma_{n-1} = 2 pi^{n/2} / Gamma(n/2), the total surface area of S^{n-1}.
double surface_area(std::size_t n);

// C_{d,lambda}: mass of (1 - |x|^2)^{lambda - 1/2} over the unit ball in R^d.
double ball_constant(std::size_t d, double lambda);

// Normalized sphere moment of x^alpha; zero when any exponent is odd.
double monomial_moment(const MultiIndex& alpha, const MomentOracle& oracle);

double integrate(const Polynomial& p, const MomentOracle& oracle);

// k-th moment of the probability weight (1 - x^2)^{nu - 1/2} / C_{1,nu} on
// [-1, 1].
double interval_moment(int k, double nu);
long double interval_moment_ld(int k, long double nu);

}  // namespace spherebound
