#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spherebound/polynomial.hpp"

namespace spherebound {

// Deterministic quasi-random points on S^{n-1}: a Sobol sequence pushed
// through the inverse normal CDF and normalized. `skip` drops leading points.
std::vector<Point> quasi_random_sphere_points(std::size_t n, std::size_t count,
                                              std::uint64_t skip = 1);

// Pseudo-random uniform points on S^{n-1} (Gaussian normalization).
std::vector<Point> random_sphere_points(std::size_t n, std::size_t count,
                                        std::uint64_t seed);

struct SampledMinimum {
  double value;
  Point argmin;
};

SampledMinimum sampled_minimum(const Polynomial& f, std::size_t count);

}  // namespace spherebound
