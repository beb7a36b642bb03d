#include "spherebound/bound.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "spherebound/errors.hpp"
#include "spherebound/moments.hpp"
#include "spherebound/orthopoly.hpp"
#include "spherebound/sampling.hpp"

namespace spherebound {

namespace {

// Elimination basis of a subspace of GF(2)^64, used to split the basis into
// classes of exponent parities between which all pencil entries vanish.
class ParitySpan {
 public:
  void insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return;
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
  }

  // Canonical coset representative.
  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t b : basis_) {
      const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(b));
      if (v & lead) v ^= b;
    }
    return v;
  }

 private:
  std::vector<std::uint64_t> basis_;
};

std::vector<std::vector<std::size_t>> parity_blocks(const BasisSpec& basis,
                                                    std::initializer_list<const Polynomial*> polys) {
  ParitySpan span;
  for (const Polynomial* p : polys) {
    for (const auto& [gamma, c] : p->terms()) span.insert(gamma.parity());
  }
  std::map<std::uint64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    classes[span.reduce(basis.elements[i].parity())].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, idx] : classes) out.push_back(std::move(idx));
  return out;
}

struct PencilSolution {
  Real value = 0.0L;
  Real second = std::numeric_limits<Real>::infinity();
  std::vector<double> coeffs;
  double condition = 1.0;
  bool factored = true;
};

// Smallest generalized eigenpair of (A_p, A_q) over `basis`.
PencilSolution solve_dense(const Polynomial& p, const Polynomial& q, const BasisSpec& basis) {
  const MomentOracle oracle(basis.n);
  PencilSolution sol;
  sol.value = std::numeric_limits<Real>::infinity();
  sol.coeffs.assign(basis.size(), 0.0);
  Real lambda_max = 0.0L;
  Real lambda_min = std::numeric_limits<Real>::infinity();
  Vector best;
  std::vector<std::size_t> best_idx;
  std::vector<Real> lowest;

  for (const auto& idx : parity_blocks(basis, {&p, &q})) {
    const auto m = static_cast<Eigen::Index>(idx.size());
    Matrix a(m, m), b(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        const auto& ei = basis.elements[idx[i]];
        const auto& ej = basis.elements[idx[j]];
        a(i, j) = a(j, i) = localized_entry(p, ei, ej, oracle);
        b(i, j) = b(j, i) = localized_entry(q, ei, ej, oracle);
      }
    }

    Eigen::SelfAdjointEigenSolver<Matrix> bspec(b, Eigen::EigenvaluesOnly);
    lambda_min = std::min(lambda_min, bspec.eigenvalues()(0));
    lambda_max = std::max(lambda_max, bspec.eigenvalues()(m - 1));

    Eigen::LLT<Matrix> llt(b);
    if (llt.info() != Eigen::Success || !(bspec.eigenvalues()(0) > 0.0L)) {
      sol.factored = false;
      return sol;
    }
    const Matrix l = llt.matrixL();
    const Matrix y = l.triangularView<Eigen::Lower>().solve(a);
    Matrix c = l.triangularView<Eigen::Lower>().solve(y.transpose());
    c = (0.5L * (c + c.transpose())).eval();

    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    const auto& vals = es.eigenvalues();
    for (Eigen::Index k = 0; k < std::min<Eigen::Index>(m, 2); ++k) lowest.push_back(vals(k));
    if (vals(0) < sol.value) {
      sol.value = vals(0);
      best = l.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors().col(0));
      best_idx = idx;
    }
  }

  std::sort(lowest.begin(), lowest.end());
  if (lowest.size() > 1) sol.second = lowest[1];
  for (std::size_t i = 0; i < best_idx.size(); ++i) {
    sol.coeffs[best_idx[i]] = static_cast<double>(best(static_cast<Eigen::Index>(i)));
  }
  sol.condition = static_cast<double>(lambda_max / lambda_min);
  return sol;
}

void canonicalize_sign(std::vector<double>& coeffs) {
  if (coeffs.empty()) return;
  auto it = std::max_element(coeffs.begin(), coeffs.end(),
                             [](double x, double y) { return std::abs(x) < std::abs(y); });
  if (*it < 0.0) {
    for (double& c : coeffs) c = -c;
  }
}

void check_arguments(const Polynomial& f, std::size_t n, int r) {
  if (n < 2) throw InputError("n must be >= 2");
  if (r < 0) throw InputError("level r must be >= 0");
  if (f.dimension() != n) {
    throw InputError("polynomial has " + std::to_string(f.dimension()) +
                     " variables, expected n = " + std::to_string(n));
  }
  if (n > 64) throw InputError("n > 64 is not supported");
}

BoundResult constant_bound(double c, std::size_t n, int r) {
  BoundResult res;
  res.n = n;
  res.r = r;
  res.value = c;
  res.basis = sphere_basis(n, r);
  res.coeffs.assign(res.basis.size(), 0.0);
  res.coeffs[0] = 1.0;  // B[0,0] = 1
  res.multiplicity_warning = res.basis.size() > 1;
  res.solver_used = Solver::dense;
  return res;
}

BoundResult dense_bound(const Polynomial& f, std::size_t n, int r) {
  BoundResult res;
  res.n = n;
  res.r = r;
  res.basis = sphere_basis(n, r);
  const auto one = Polynomial::constant(n, 1.0);
  auto sol = solve_dense(f, one, res.basis);
  if (!sol.factored) {
    throw NumericalError("Gram matrix is not numerically positive definite");
  }
  res.value = static_cast<double>(sol.value);
  res.coeffs = std::move(sol.coeffs);
  canonicalize_sign(res.coeffs);
  res.condition_number = sol.condition;
  res.condition_warning = sol.condition > kConditionWarningThreshold;
  res.multiplicity_warning = sol.second - sol.value < kMultiplicityGap;
  res.solver_used = Solver::dense;
  return res;
}

// f = c0 + c.x with c != 0. Averaging a density over the rotations fixing c
// leaves the objective unchanged and produces a function of t = c.x/|c|;
// the pencil then block-diagonalizes by the degree m of the O(n-1) harmonic
// factor into univariate Jacobi pencils with a = b = (n-3)/2 + m and degree
// <= r - m. The m = 0 block (the Jacobi matrix of size r + 1) attains the
// minimum because extremal roots move inward as a grows and the degree drops.
BoundResult zonal_bound(const Polynomial& f, std::size_t n, int r) {
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coefficient(MultiIndex::unit(n, i));
  double rho = 0.0;
  for (double v : c) rho += v * v;
  rho = std::sqrt(rho);
  for (double& v : c) v /= rho;

  const double a = (static_cast<double>(n) - 3.0) / 2.0;
  const auto jac = jacobi_matrix({a, a}, r + 1);
  const auto eig = solve_tridiagonal(jac, true);

  BoundResult res;
  res.n = n;
  res.r = r;
  res.basis = sphere_basis(n, r);
  res.value = f.constant_term() + rho * eig.values[0];
  res.solver_used = Solver::zonal;

  double second = std::numeric_limits<double>::infinity();
  if (r >= 1) {
    second = std::min(eig.values[1], smallest_root({a + 1.0, a + 1.0}, r));
  }
  res.multiplicity_warning = rho * (second - eig.values[0]) < kMultiplicityGap;

  // root(x) = sum_k v_k p_k(c.x) with p_k orthonormal for the normalized
  // Gegenbauer weight, built by the three-term recurrence and reduced on
  // the fly.
  const Polynomial t = Polynomial::linear(c);
  std::vector<Polynomial> p_k{Polynomial::constant(n, 1.0)};
  if (r >= 1) p_k.push_back(reduce_mod_sphere((t - Polynomial::constant(n, jac.diag[0])) * (1.0 / jac.offdiag[0])));
  for (int k = 1; k < r; ++k) {
    Polynomial next = (t - Polynomial::constant(n, jac.diag[k])) * p_k[k] - p_k[k - 1] * jac.offdiag[k - 1];
    p_k.push_back(reduce_mod_sphere(next * (1.0 / jac.offdiag[k])));
  }
  Polynomial root(n);
  for (int k = 0; k <= r; ++k) root += p_k[k] * eig.vectors(k, 0);

  res.coeffs.assign(res.basis.size(), 0.0);
  for (const auto& [alpha, coeff] : root.terms()) {
    const std::size_t i = res.basis.index_of(alpha);
    if (i == res.basis.size()) throw NumericalError("zonal density escaped the sphere basis");
    res.coeffs[i] = coeff;
  }
  canonicalize_sign(res.coeffs);
  return res;
}

}  // namespace

BoundResult upper_bound(const Polynomial& f, std::size_t n, int r, const BoundOptions& options) {
  check_arguments(f, n, r);
  const int deg = f.degree();
  if (deg == 0) return constant_bound(f.constant_term(), n, r);
  switch (options.solver) {
    case Solver::zonal:
      if (deg != 1) throw InputError("the zonal solver needs a linear objective");
      return zonal_bound(f, n, r);
    case Solver::dense:
      return dense_bound(f, n, r);
    case Solver::automatic:
      return deg == 1 ? zonal_bound(f, n, r) : dense_bound(f, n, r);
  }
  return dense_bound(f, n, r);
}

BoundResult rational_upper_bound(const Polynomial& p, const Polynomial& q, std::size_t n, int r) {
  check_arguments(p, n, r);
  check_arguments(q, n, r);
  for (const auto& x : quasi_random_sphere_points(n, 10000)) {
    if (!(evaluate(q, x) > 0.0)) {
      throw InputError("q is not positive on the sphere (sampled value <= 0)");
    }
  }
  BoundResult res;
  res.n = n;
  res.r = r;
  res.basis = sphere_basis(n, r);
  auto sol = solve_dense(p, q, res.basis);
  if (!sol.factored) throw InputError("q not certified positive at this level");
  res.value = static_cast<double>(sol.value);
  res.coeffs = std::move(sol.coeffs);
  canonicalize_sign(res.coeffs);
  res.condition_number = sol.condition;
  res.condition_warning = sol.condition > kConditionWarningThreshold;
  res.multiplicity_warning = sol.second - sol.value < kMultiplicityGap;
  res.solver_used = Solver::dense;
  return res;
}

Density extract_density(const BoundResult& result) {
  Polynomial root(result.n);
  for (std::size_t i = 0; i < result.basis.size(); ++i) {
    root += Polynomial::monomial(result.basis.elements[i], result.coeffs[i]);
  }
  Density d{root, root * root, result.r};
  return d;
}

Point spherical_point(double theta, double phi) {
  return {std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), std::cos(theta)};
}

DensityGrid density_grid(const Density& density, std::size_t n, int resolution) {
  if (n != 3) throw InputError("density grids are only defined for n = 3");
  if (density.h.dimension() != 3) throw InputError("density is not a polynomial in 3 variables");
  if (resolution < 1) throw InputError("resolution must be >= 1");
  DensityGrid grid;
  grid.resolution = resolution;
  grid.rows.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 1));
  for (int i = 0; i <= resolution; ++i) {
    const double theta = std::numbers::pi * i / resolution;
    for (int j = 0; j <= resolution; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / resolution;
      grid.rows.push_back({theta, phi, evaluate(density.h, spherical_point(theta, phi))});
    }
  }
  return grid;
}

std::vector<GridPoint> grid_local_maxima(const DensityGrid& grid) {
  const int res = grid.resolution;
  std::vector<GridPoint> out;
  for (int i = 1; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const double v = grid.at(i, j).h;
      bool ge_all = true;
      bool gt_one = false;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double w = grid.at(i + di, ((j + dj) % res + res) % res).h;
          ge_all = ge_all && v >= w;
          gt_one = gt_one || v > w;
        }
      }
      if (ge_all && gt_one) out.push_back(grid.at(i, j));
    }
  }
  return out;
}

void write_density_csv(std::ostream& os, const DensityGrid& grid) {
  os << "theta,phi,h\n";
  char buf[96];
  for (const auto& row : grid.rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", row.theta, row.phi, row.h);
    os << buf;
  }
}

nlohmann::json to_json(const BoundResult& result) {
  return nlohmann::json{{"n", result.n},
                        {"r", result.r},
                        {"value", result.value},
                        {"basis_size", result.basis.size()},
                        {"condition_warning", result.condition_warning},
                        {"coeffs", result.coeffs}};
}

}  // namespace spherebound
