#pragma once

#include <cstddef>
#include <vector>

#include "spherebound/polynomial.hpp"

namespace spherebound {

enum class Domain { interval, circle, sphere };

// Nodes with positive weights. On the interval nodes are 1-vectors; on the
// circle and sphere they are points of R^n (for the circle, `angles` holds
// theta_j as well).
struct QuadratureRule {
  Domain domain = Domain::interval;
  std::size_t dimension = 1;
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::vector<double> angles;
  int exactness_degree = 0;

  std::size_t size() const { return weights.size(); }
  double total_weight() const;
};

}  // namespace spherebound
