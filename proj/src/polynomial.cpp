#include "spherebound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "spherebound/errors.hpp"

namespace spherebound {

MultiIndex::MultiIndex(std::initializer_list<int> exps)
    : MultiIndex(std::vector<int>(exps)) {}

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InputError("negative exponent in multi-index");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i, int power) {
  MultiIndex m(n);
  m.set(i, power);
  return m;
}

void MultiIndex::set(std::size_t i, int value) {
  if (value < 0) throw InputError("negative exponent in multi-index");
  degree_ += value - exps_[i];
  exps_[i] = value;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) {
    throw InputError("multi-index length mismatch");
  }
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::uint64_t MultiIndex::parity() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] & 1) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t n, TermMap terms) : n_(n) {
  for (auto& [alpha, c] : terms) {
    if (alpha.size() != n) throw InputError("multi-index length differs from dimension");
    if (c != 0.0) terms_.emplace(alpha, c);
  }
}

Polynomial Polynomial::constant(std::size_t n, double c) {
  Polynomial p(n);
  if (c != 0.0) p.terms_.emplace(MultiIndex(n), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, double c) {
  Polynomial p(alpha.size());
  if (c != 0.0) p.terms_.emplace(alpha, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  return monomial(MultiIndex::unit(n, i));
}

Polynomial Polynomial::linear(std::span<const double> c, double c0) {
  Polynomial p = constant(c.size(), c0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0.0) p.terms_.emplace(MultiIndex::unit(c.size(), i), c[i]);
  }
  return p;
}

int Polynomial::degree() const {
  // Terms are sorted by degree, so the last one is of maximal degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

double Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_term() const { return coefficient(MultiIndex(n_)); }

void Polynomial::check_same_dimension(const Polynomial& other) const {
  if (other.n_ != n_) {
    throw InputError("polynomial dimension mismatch: " + std::to_string(n_) +
                     " vs " + std::to_string(other.n_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [alpha, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

Polynomial Polynomial::operator*(double s) const {
  Polynomial out(n_);
  if (s == 0.0) return out;
  for (const auto& [alpha, c] : terms_) {
    const double v = c * s;
    if (v != 0.0) out.terms_.emplace_hint(out.terms_.end(), alpha, v);
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_dimension(other);
  Polynomial out(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      out.terms_[a + b] += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        origin_.push_back(i);
      }
    }
    origin_.push_back(text.size());
  }

  Polynomial parse() {
    if (chars_.empty()) fail("empty polynomial");
    Polynomial result(n_);
    bool first = true;
    while (pos_ < chars_.size()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term() * sign;
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, origin_[std::min(pos_, chars_.size())]);
  }

  Polynomial parse_term() {
    double coeff = 1.0;
    MultiIndex alpha(n_);
    while (true) {
      const char c = peek();
      if (c == 'x' || c == 'X') {
        ++pos_;
        const std::size_t at = pos_;
        const long var = parse_integer("variable index");
        if (var < 1 || static_cast<std::size_t>(var) > n_) {
          pos_ = at;
          fail("variable index x" + std::to_string(var) + " out of range 1.." +
               std::to_string(n_));
        }
        long power = 1;
        if (peek() == '^') {
          ++pos_;
          power = parse_integer("exponent");
        }
        const auto i = static_cast<std::size_t>(var - 1);
        alpha.set(i, alpha[i] + static_cast<int>(power));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coeff *= parse_number();
      } else {
        fail("expected a coefficient or a variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return Polynomial::monomial(alpha, coeff);
  }

  long parse_integer(const char* what) {
    const char* begin = chars_.data() + pos_;
    const char* end = chars_.data() + chars_.size();
    long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  double parse_number() {
    const char* begin = chars_.data() + pos_;
    const char* end = chars_.data() + chars_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
    if (ec != std::errc() || ptr == begin) fail("malformed coefficient");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t n_;
  std::vector<char> chars_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

std::string format_coefficient(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) throw InputError("dimension must be positive");
  return Parser(text, n).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : p.terms()) {
    const double mag = std::abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (alpha[i] > 1) factors += "^" + std::to_string(alpha[i]);
    }
    if (factors.empty()) {
      out += format_coefficient(mag);
    } else if (mag == 1.0) {
      out += factors;
    } else {
      out += format_coefficient(mag) + "*" + factors;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

double evaluate(const Polynomial& p, std::span<const double> x) {
  if (x.size() != p.dimension()) {
    throw InputError("point has dimension " + std::to_string(x.size()) +
                     ", polynomial has " + std::to_string(p.dimension()));
  }
  const int deg = p.degree();
  const std::size_t n = x.size();
  // powers[i * (deg + 1) + k] = x_i^k
  std::vector<double> powers(n * static_cast<std::size_t>(deg + 1), 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 1; k <= deg; ++k) {
      powers[i * (deg + 1) + k] = powers[i * (deg + 1) + k - 1] * x[i];
    }
  }
  double sum = 0.0;
  for (const auto& [alpha, c] : p.terms()) {
    double term = c;
    for (std::size_t i = 0; i < n; ++i) term *= powers[i * (deg + 1) + alpha[i]];
    sum += term;
  }
  return sum;
}

Polynomial derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.dimension()) throw InputError("derivative variable out of range");
  Polynomial::TermMap terms;
  for (const auto& [alpha, c] : p.terms()) {
    if (alpha[i] == 0) continue;
    MultiIndex beta(alpha);
    beta.set(i, alpha[i] - 1);
    terms.emplace(beta, c * alpha[i]);
  }
  return Polynomial(p.dimension(), std::move(terms));
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) g.push_back(derivative(p, i));
  return g;
}

std::vector<std::vector<Polynomial>> hessian(const Polynomial& p) {
  std::vector<std::vector<Polynomial>> h;
  for (const auto& gi : gradient(p)) h.push_back(gradient(gi));
  return h;
}

Polynomial compose_linear(const Polynomial& p, const Eigen::MatrixXd& m) {
  const std::size_t n = p.dimension();
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    throw InputError("compose_linear: matrix must be n x n");
  }
  const int deg = p.degree();
  // powers[i][k] = (row i of M . x)^k
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    const Polynomial form = Polynomial::linear(row);
    powers[i].push_back(Polynomial::constant(n, 1.0));
    for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * form);
  }
  Polynomial out(n);
  for (const auto& [alpha, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] > 0) term = term * powers[i][alpha[i]];
    }
    out += term;
  }
  return out;
}

Polynomial reduce_mod_sphere(const Polynomial& p) {
  const std::size_t n = p.dimension();
  if (n == 0) return p;
  const std::size_t last = n - 1;

  int max_half = 0;
  for (const auto& [alpha, c] : p.terms()) max_half = std::max(max_half, alpha[last] / 2);
  if (max_half == 0) return p;

  // s^k with s = 1 - x_1^2 - ... - x_{n-1}^2
  Polynomial s = Polynomial::constant(n, 1.0);
  for (std::size_t i = 0; i < last; ++i) {
    s += Polynomial::monomial(MultiIndex::unit(n, i, 2), -1.0);
  }
  std::vector<Polynomial> s_pow{Polynomial::constant(n, 1.0)};
  for (int k = 1; k <= max_half; ++k) s_pow.push_back(s_pow.back() * s);

  Polynomial out(n);
  for (const auto& [alpha, c] : p.terms()) {
    const int half = alpha[last] / 2;
    MultiIndex rest(alpha);
    rest.set(last, alpha[last] % 2);
    if (half == 0) {
      out += Polynomial::monomial(rest, c);
    } else {
      out += Polynomial::monomial(rest, c) * s_pow[half];
    }
  }
  return out;
}

}  // namespace spherebound
