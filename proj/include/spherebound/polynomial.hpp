#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace spherebound {

using Point = std::vector<double>;

// Exponent vector alpha in N^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0), degree_(0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  static MultiIndex unit(std::size_t n, std::size_t i, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Sets one exponent, keeping the cached degree in sync.
  void set(std::size_t i, int value);

  MultiIndex operator+(const MultiIndex& other) const;

  // Bit i set iff exponent i is odd (n <= 64).
  std::uint64_t parity() const;

  bool operator==(const MultiIndex& other) const { return exps_ == other.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Graded order used everywhere terms are listed: lower degree first, then
// lexicographically larger exponent vectors first (so x1 precedes x2).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Sparse polynomial in n real variables with double coefficients. Values are
// immutable from the outside; every stored coefficient is nonzero.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, double, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}
  Polynomial(std::size_t n, TermMap terms);

  static Polynomial constant(std::size_t n, double c);
  static Polynomial monomial(const MultiIndex& alpha, double c = 1.0);
  static Polynomial variable(std::size_t n, std::size_t i);
  // c0 + sum_i c[i] x_{i+1}
  static Polynomial linear(std::span<const double> c, double c0 = 0.0);

  std::size_t dimension() const { return n_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double coefficient(const MultiIndex& alpha) const;
  double constant_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double s) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);

  bool operator==(const Polynomial& other) const;

 private:
  void check_same_dimension(const Polynomial& other) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }
inline Polynomial operator+(const Polynomial& p, double c) {
  return p + Polynomial::constant(p.dimension(), c);
}
inline Polynomial operator+(double c, const Polynomial& p) { return p + c; }
inline Polynomial operator-(const Polynomial& p, double c) { return p + (-c); }

// Grammar: terms joined by '+'/'-'; a term is '*'-separated factors, each a
// decimal literal or xI[^E]. Whitespace is ignored.
Polynomial parse_poly(std::string_view text, std::size_t n);

// Prints in the parse grammar; coefficients use %.17g so parse(print(p)) == p.
std::string to_string(const Polynomial& p);

double evaluate(const Polynomial& p, std::span<const double> x);

std::vector<Polynomial> gradient(const Polynomial& p);
Polynomial derivative(const Polynomial& p, std::size_t i);
// hessian[i][j] = d^2 p / dx_i dx_j
std::vector<std::vector<Polynomial>> hessian(const Polynomial& p);

// p(M x) for an n x n matrix M.
Polynomial compose_linear(const Polynomial& p, const Eigen::MatrixXd& m);

// Canonical representative modulo (1 - |x|^2): every term has x_n exponent
// at most 1, obtained by substituting x_n^2 = 1 - x_1^2 - ... - x_{n-1}^2.
Polynomial reduce_mod_sphere(const Polynomial& p);

}  // namespace spherebound
