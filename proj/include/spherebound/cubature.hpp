#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>

#include "spherebound/polynomial.hpp"
#include "spherebound/quadrature.hpp"

namespace spherebound {

// Equispaced rule theta_j = 2 pi j / d with weights 1/d for the normalized
// measure on the circle. Exact for trigonometric polynomials of degree
// <= d - 1 and for sin(d theta), but not for cos(d theta).
QuadratureRule circle_rule(int d);

// Product rule on S^{n-1} in generalized spherical coordinates: theta_1 on
// the grid pi k / d (k < 2d), theta_i (2 <= i <= n-1) at the arccosines of
// the roots of C^{(i-1)/2}_d. Weights are (pi/d) times the Gauss-Gegenbauer
// weights, rescaled to total surface_area(n). 2d * d^{n-2} nodes, exact for
// polynomials of degree <= 2d - 1 against the (unnormalized) surface measure.
QuadratureRule sphere_product_rule(std::size_t n, int d);

std::size_t sphere_product_rule_size(std::size_t n, int d);

// Sum of w_i g(x_i).
double apply_rule(const QuadratureRule& rule, const std::function<double(const Point&)>& g);

// Largest relative error over all monomials of degree <= max_degree, against
// surface_area(n) * monomial_moment. Absolute error is used where the exact
// value vanishes.
double sphere_exactness_error(const QuadratureRule& rule, int max_degree);

// Smallest d with 2d - 1 >= degree + 2r.
int cubature_parameter(int degree, int r);

// min over the nodes of sphere_product_rule(n, cubature_parameter(deg f, r))
// of f; a lower bound on the level-r upper bound.
double cubature_lower_bound(const Polynomial& f, std::size_t n, int r);

// CSV with header x1,...,xn,weight and %.17g values.
void write_rule_csv(std::ostream& os, const QuadratureRule& rule);

}  // namespace spherebound
