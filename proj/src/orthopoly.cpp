#include "spherebound/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spherebound/errors.hpp"
#include "spherebound/moments.hpp"

namespace spherebound {

double QuadratureRule::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

TridiagonalEigen solve_tridiagonal(const TridiagonalMatrix& t, bool want_vectors) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return {};
  if (static_cast<int>(t.offdiag.size()) != n - 1) {
    throw InputError("tridiagonal matrix: offdiag must have size n - 1");
  }
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
  Eigen::MatrixXd z;
  if (want_vectors) z = Eigen::MatrixXd::Identity(n, n);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericalError("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (want_vectors) {
            for (int k = 0; k < n; ++k) {
              f = z(k, i + 1);
              z(k, i + 1) = s * z(k, i) + c * f;
              z(k, i) = c * z(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });
  TridiagonalEigen out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[order[j]];
    if (want_vectors) out.vectors.col(j) = z.col(order[j]);
  }
  return out;
}

TridiagonalMatrix jacobi_matrix(const JacobiParams& params, int d) {
  const double a = params.a;
  const double b = params.b;
  if (!(a > -1.0) || !(b > -1.0)) throw InputError("Jacobi parameters must exceed -1");
  if (d < 1) throw InputError("Jacobi matrix needs degree >= 1");

  TridiagonalMatrix t;
  t.diag.resize(d);
  t.offdiag.resize(d - 1);
  const double ab = a + b;
  for (int k = 0; k < d; ++k) {
    if (a == b) {
      t.diag[k] = 0.0;
    } else if (k == 0) {
      t.diag[k] = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      t.diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < d; ++k) {
    double beta;
    if (k == 1) {
      // closed form avoids 0/0 when a + b = -1
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double s = 2.0 * k + ab;
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    t.offdiag[k - 1] = std::sqrt(beta);
  }
  return t;
}

double smallest_root(const JacobiParams& params, int d) {
  return solve_tridiagonal(jacobi_matrix(params, d), false).values.front();
}

std::vector<double> gegenbauer_roots(double lambda, int d) {
  if (!(lambda > -0.5)) throw InputError("Gegenbauer index must exceed -1/2");
  return solve_tridiagonal(jacobi_matrix(JacobiParams::gegenbauer(lambda), d), false).values;
}

QuadratureRule gauss_rule(double lambda, int d) {
  if (!(lambda > -0.5)) throw InputError("Gegenbauer index must exceed -1/2");
  const auto eig = solve_tridiagonal(jacobi_matrix(JacobiParams::gegenbauer(lambda), d), true);
  const double mass = ball_constant(1, lambda);
  QuadratureRule rule;
  rule.domain = Domain::interval;
  rule.dimension = 1;
  rule.exactness_degree = 2 * d - 1;
  for (int j = 0; j < d; ++j) {
    const double v0 = eig.vectors(0, j);
    rule.nodes.push_back({eig.values[j]});
    rule.weights.push_back(mass * v0 * v0);
  }
  return rule;
}

}  // namespace spherebound
