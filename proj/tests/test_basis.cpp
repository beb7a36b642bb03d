#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "spherebound/basis.hpp"
#include "spherebound/harness.hpp"
#include "spherebound/sampling.hpp"

using namespace spherebound;

namespace {

double monomial_value(const MultiIndex& a, const Point& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], a[i]);
  return v;
}

Vector generalized_eigenvalues(const Matrix& a, const Matrix& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(a, b, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

TEST(SphereBasis, CircleLevelOne) {
  const auto b = sphere_basis(2, 1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.elements[0], (MultiIndex{0, 0}));
  EXPECT_EQ(b.elements[1], (MultiIndex{1, 0}));
  EXPECT_EQ(b.elements[2], (MultiIndex{0, 1}));
}

TEST(SphereBasis, Sizes) {
  EXPECT_EQ(sphere_basis(3, 2).size(), 9u);
  EXPECT_EQ(sphere_basis(3, 9).size(), 100u);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int r = 0; r <= 7; ++r) {
      const auto b = sphere_basis(n, r);
      EXPECT_EQ(b.size(), sphere_basis_size(n, r));
      for (const auto& a : b.elements) {
        EXPECT_LE(a.degree(), r);
        EXPECT_LE(a[n - 1], 1);
      }
    }
  }
  // dimension of the degree <= r polynomials on S^2 is (r+1)^2
  for (int r = 0; r <= 12; ++r) EXPECT_EQ(sphere_basis_size(3, r), static_cast<std::size_t>((r + 1) * (r + 1)));
}

TEST(SphereBasis, IndexOf) {
  const auto b = sphere_basis(3, 4);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b.elements[i]), i);
  EXPECT_EQ(b.index_of(MultiIndex{0, 0, 2}), b.size());
}

TEST(Gram, FirstEntryIsOne) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const MomentOracle o(n);
    EXPECT_EQ(gram_matrix(sphere_basis(n, 3), o)(0, 0), 1.0L);
  }
}

TEST(Gram, CircleLevelOne) {
  const MomentOracle o(2);
  const auto b = gram_matrix(sphere_basis(2, 1), o);
  Matrix expected(3, 3);
  expected << 1, 0, 0, 0, 0.5, 0, 0, 0, 0.5;
  EXPECT_LE((b - expected).cwiseAbs().maxCoeff(), 1e-18L);
}

TEST(Gram, MatchesSamplingAndIsDefinite) {
  const MomentOracle o(3);
  const auto basis = sphere_basis(3, 3);
  const auto b = gram_matrix(basis, o);
  Eigen::SelfAdjointEigenSolver<Matrix> es(b, Eigen::EigenvaluesOnly);
  EXPECT_GT(es.eigenvalues()(0), 0.0L);
  const auto pts = quasi_random_sphere_points(3, 200'000);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto ab = basis.elements[i] + basis.elements[j];
      double s = 0.0;
      for (const auto& x : pts) s += monomial_value(ab, x);
      EXPECT_NEAR(static_cast<double>(b(i, j)), s / pts.size(), 1e-3);
    }
  }
}

TEST(Gram, LinearIndependence) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const MomentOracle o(n);
    for (int r = 0; r <= 6; ++r) {
      const auto b = gram_matrix(sphere_basis(n, r), o);
      Eigen::SelfAdjointEigenSolver<Matrix> es(b, Eigen::EigenvaluesOnly);
      EXPECT_GT(es.eigenvalues()(0), 1e-10L) << "n=" << n << " r=" << r;
    }
  }
}

// Every monomial of degree <= r lies in the span of the basis on the sphere:
// its L2 distance to the projection vanishes.
TEST(Gram, Completeness) {
  for (std::size_t n : {2u, 3u}) {
    const MomentOracle o(n);
    for (int r = 0; r <= 4; ++r) {
      const auto basis = sphere_basis(n, r);
      const auto b = gram_matrix(basis, o);
      const Eigen::LLT<Matrix> llt(b);
      std::vector<int> e(n, 0);
      auto check = [&](const MultiIndex& m) {
        Vector rhs(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) rhs(i) = o.moment(m + basis.elements[i]);
        const Vector c = llt.solve(rhs);
        const Real residual = o.moment(m + m) - c.dot(rhs);
        EXPECT_LT(std::abs(static_cast<double>(residual)), 1e-10) << "n=" << n << " r=" << r;
      };
      auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == n) {
          check(MultiIndex(e));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[i] = v;
          self(self, i + 1, left - v);
        }
        e[i] = 0;
      };
      rec(rec, 0, r);
    }
  }
}

TEST(Localized, ConstantOneGivesGram) {
  const MomentOracle o(3);
  const auto basis = sphere_basis(3, 4);
  EXPECT_LE((localized_matrix(Polynomial::constant(3, 1.0), basis, o) - gram_matrix(basis, o))
                .cwiseAbs()
                .maxCoeff(),
            0.0L);
}

TEST(Localized, LinearOnCircle) {
  const MomentOracle o(2);
  const auto a = localized_matrix(Polynomial::variable(2, 0), sphere_basis(2, 1), o);
  EXPECT_NEAR(static_cast<double>(a(0, 1)), 0.5, 1e-18);
  EXPECT_NEAR(static_cast<double>(a(1, 0)), 0.5, 1e-18);
  EXPECT_EQ(a(0, 0), 0.0L);
  EXPECT_EQ(a(0, 2), 0.0L);
  EXPECT_EQ(a(1, 1), 0.0L);
  EXPECT_EQ(a(1, 2), 0.0L);
  EXPECT_EQ(a(2, 2), 0.0L);
}

TEST(Localized, MotzkinLevelZero) {
  const MomentOracle o(3);
  const auto a = localized_matrix(motzkin_form(), sphere_basis(3, 0), o);
  ASSERT_EQ(a.rows(), 1);
  EXPECT_NEAR(static_cast<double>(a(0, 0)), 6.0 / 35.0, 1e-16);
}

TEST(Localized, Linearity) {
  const MomentOracle o(3);
  const auto basis = sphere_basis(3, 4);
  const auto f = motzkin_form();
  const auto g = parse_poly("x1*x2 - 0.5*x3^3 + 2", 3);
  const Matrix lhs = localized_matrix(f + g, basis, o);
  const Matrix rhs = localized_matrix(f, basis, o) + localized_matrix(g, basis, o);
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14L);
}

TEST(Localized, SymmetricAndEntrywise) {
  const MomentOracle o(3);
  const auto basis = sphere_basis(3, 3);
  const auto f = motzkin_form();
  const auto a = localized_matrix(f, basis, o);
  EXPECT_EQ((a - a.transpose()).cwiseAbs().maxCoeff(), 0.0L);
  EXPECT_EQ(a(2, 5), localized_entry(f, basis.elements[2], basis.elements[5], o));
}

// Rescaling the reference measure by c multiplies A and B by c.
TEST(Pencil, ScalingInvariance) {
  const auto p = make_pencil(motzkin_form(), sphere_basis(3, 3));
  const Real c = 7.3L;
  const Vector base = generalized_eigenvalues(p.a, p.b);
  const Vector scaled = generalized_eigenvalues(c * p.a, c * p.b);
  EXPECT_LE((base - scaled).cwiseAbs().maxCoeff(), 1e-15L);
  EXPECT_NEAR(static_cast<double>(base(0)), 0.0457186, 1e-7);
}

TEST(Pencil, MatrixDump) {
  Matrix m(2, 2);
  m << 1, 0.1L, 0.1L, 1.0L / 3;
  std::ostringstream os;
  write_matrix(os, m);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "1 0.10000000000000001");
  double a, b;
  is >> a >> b;
  EXPECT_EQ(a, 0.1);
  EXPECT_EQ(b, 1.0 / 3);
}
