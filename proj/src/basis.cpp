#include "spherebound/basis.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "spherebound/errors.hpp"

namespace spherebound {

namespace {

// All exponent vectors of length k with total degree exactly d, appended in
// lexicographically decreasing order.
void compositions(std::size_t k, int d, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == k) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(e);
    compositions(k, d - e, prefix, out);
    prefix.pop_back();
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

std::size_t BasisSpec::index_of(const MultiIndex& alpha) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), alpha, GradedLexLess{});
  if (it != elements.end() && *it == alpha) return static_cast<std::size_t>(it - elements.begin());
  return elements.size();
}

BasisSpec sphere_basis(std::size_t n, int r) {
  if (n < 2) throw InputError("sphere_basis needs n >= 2");
  if (r < 0) throw InputError("sphere_basis needs r >= 0");
  BasisSpec basis{n, r, {}};
  for (int d = 0; d <= r; ++d) {
    std::vector<std::vector<int>> all;
    std::vector<int> prefix;
    compositions(n, d, prefix, all);
    for (auto& e : all) {
      if (e.back() <= 1) basis.elements.emplace_back(std::move(e));
    }
  }
  return basis;
}

std::size_t sphere_basis_size(std::size_t n, int r) {
  if (r < 0) return 0;
  // monomials of degree <= r in n - 1 variables: C(r + n - 1, n - 1)
  const std::size_t m = n - 1;
  std::size_t count = binomial(static_cast<std::size_t>(r) + m, m);
  if (r >= 1) count += binomial(static_cast<std::size_t>(r) - 1 + m, m);
  return count;
}

Real localized_entry(const Polynomial& f, const MultiIndex& a, const MultiIndex& b,
                     const MomentOracle& oracle) {
  const MultiIndex ab = a + b;
  Real sum = 0.0L;
  for (const auto& [gamma, c] : f.terms()) {
    sum += static_cast<Real>(c) * oracle.moment(gamma + ab);
  }
  return sum;
}

Matrix gram_matrix(const BasisSpec& basis, const MomentOracle& oracle) {
  if (basis.n != oracle.dimension()) throw InputError("basis and oracle dimensions differ");
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      g(i, j) = g(j, i) = oracle.moment(basis.elements[i] + basis.elements[j]);
    }
  }
  return g;
}

Matrix localized_matrix(const Polynomial& f, const BasisSpec& basis,
                        const MomentOracle& oracle) {
  if (f.dimension() != basis.n) throw InputError("polynomial and basis dimensions differ");
  if (basis.n != oracle.dimension()) throw InputError("basis and oracle dimensions differ");
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      a(i, j) = a(j, i) = localized_entry(f, basis.elements[i], basis.elements[j], oracle);
    }
  }
  return a;
}

Pencil make_pencil(const Polynomial& f, const BasisSpec& basis) {
  const MomentOracle oracle(basis.n);
  return Pencil{localized_matrix(f, basis, oracle), gram_matrix(basis, oracle), basis, f};
}

void write_matrix(std::ostream& os, const Matrix& m) {
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(m(i, j)));
      if (j > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace spherebound
