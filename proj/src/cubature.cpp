#include "spherebound/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "spherebound/basis.hpp"
#include "spherebound/errors.hpp"
#include "spherebound/moments.hpp"
#include "spherebound/orthopoly.hpp"

namespace spherebound {

QuadratureRule circle_rule(int d) {
  if (d < 1) throw InputError("circle_rule needs d >= 1");
  QuadratureRule rule;
  rule.domain = Domain::circle;
  rule.dimension = 2;
  rule.exactness_degree = d - 1;
  for (int j = 0; j < d; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / d;
    rule.angles.push_back(theta);
    rule.nodes.push_back({std::cos(theta), std::sin(theta)});
    rule.weights.push_back(1.0 / d);
  }
  return rule;
}

std::size_t sphere_product_rule_size(std::size_t n, int d) {
  std::size_t count = 2 * static_cast<std::size_t>(d);
  for (std::size_t i = 2; i < n; ++i) count *= static_cast<std::size_t>(d);
  return count;
}

QuadratureRule sphere_product_rule(std::size_t n, int d) {
  if (n < 2) throw InputError("sphere_product_rule needs n >= 2");
  if (d < 1) throw InputError("sphere_product_rule needs d >= 1");

  // Factor i (i = 2..n-1) supplies cos(theta_i), sin(theta_i) and a weight.
  struct Factor {
    std::vector<double> cos_t, sin_t, w;
  };
  std::vector<Factor> factors;
  for (std::size_t i = 2; i < n; ++i) {
    const auto g = gauss_rule((static_cast<double>(i) - 1.0) / 2.0, d);
    Factor f;
    for (int j = 0; j < d; ++j) {
      const double t = g.nodes[j][0];
      f.cos_t.push_back(t);
      f.sin_t.push_back(std::sqrt(std::max(0.0, 1.0 - t * t)));
      f.w.push_back(g.weights[j]);
    }
    factors.push_back(std::move(f));
  }

  QuadratureRule rule;
  rule.domain = Domain::sphere;
  rule.dimension = n;
  rule.exactness_degree = 2 * d - 1;
  const std::size_t total = sphere_product_rule_size(n, d);
  rule.nodes.reserve(total);
  rule.weights.reserve(total);

  std::vector<int> idx(factors.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    // idx enumerates theta_2..theta_{n-1}; the angular index k runs fastest.
    const int k = static_cast<int>(count % (2 * d));
    if (k == 0 && count > 0) {
      for (std::size_t f = 0; f < idx.size(); ++f) {
        if (++idx[f] < d) break;
        idx[f] = 0;
      }
    }
    const double theta1 = std::numbers::pi * k / d;
    Point x(n);
    // Build from the innermost circle outward:
    // (x1, x2) = (cos theta_1, sin theta_1), then each factor i scales the
    // current point by sin theta_i and appends cos theta_i as x_{i+1}.
    x[0] = std::cos(theta1);
    x[1] = std::sin(theta1);
    double w = std::numbers::pi / d;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& fac = factors[f];
      const double s = fac.sin_t[idx[f]];
      for (std::size_t c = 0; c < f + 2; ++c) x[c] *= s;
      x[f + 2] = fac.cos_t[idx[f]];
      w *= fac.w[idx[f]];
    }
    rule.nodes.push_back(std::move(x));
    rule.weights.push_back(w);
  }

  const double scale = surface_area(n) / rule.total_weight();
  for (double& w : rule.weights) w *= scale;
  return rule;
}

double apply_rule(const QuadratureRule& rule, const std::function<double(const Point&)>& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * g(rule.nodes[i]);
  return sum;
}

double sphere_exactness_error(const QuadratureRule& rule, int max_degree) {
  const std::size_t n = rule.dimension;
  const MomentOracle oracle(n);
  const double area = surface_area(n);
  double worst = 0.0;
  // All monomials of degree <= max_degree, including those with x_n^k, k >= 2.
  std::vector<MultiIndex> monomials;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      for (int v = 0; v <= left; ++v) {
        e[i] = v;
        monomials.emplace_back(e);
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, max_degree);
  for (const auto& alpha : monomials) {
    const double exact = area * monomial_moment(alpha, oracle);
    double approx = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      double v = rule.weights[i];
      for (std::size_t c = 0; c < n; ++c) {
        for (int p = 0; p < alpha[c]; ++p) v *= rule.nodes[i][c];
      }
      approx += v;
    }
    const double err = exact != 0.0 ? std::abs(approx - exact) / std::abs(exact)
                                    : std::abs(approx);
    worst = std::max(worst, err);
  }
  return worst;
}

int cubature_parameter(int degree, int r) {
  // 2d - 1 >= degree + 2r
  return std::max(1, (degree + 2 * r + 2) / 2);
}

double cubature_lower_bound(const Polynomial& f, std::size_t n, int r) {
  if (f.dimension() != n) throw InputError("polynomial dimension differs from n");
  if (r < 0) throw InputError("level r must be >= 0");
  if (f.degree() == 0) return f.constant_term();
  const auto rule = sphere_product_rule(n, cubature_parameter(f.degree(), r));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : rule.nodes) best = std::min(best, evaluate(f, x));
  return best;
}

void write_rule_csv(std::ostream& os, const QuadratureRule& rule) {
  for (std::size_t c = 0; c < rule.dimension; ++c) os << 'x' << c + 1 << ',';
  os << "weight\n";
  char buf[64];
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t c = 0; c < rule.dimension; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g,", rule.nodes[i][c]);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", rule.weights[i]);
    os << buf;
  }
}

}  // namespace spherebound
