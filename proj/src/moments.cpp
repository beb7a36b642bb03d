#include "spherebound/moments.hpp"

#include <cmath>
#include <numbers>

#include "spherebound/errors.hpp"

namespace spherebound {

namespace {

constexpr long double kLogPi = 1.144729885849400174143427351353058712L;
// log Gamma(1/2) = log(pi) / 2
constexpr long double kLogGammaHalf = kLogPi / 2.0L;

}  // namespace

MomentOracle::MomentOracle(std::size_t n) : n_(n) {
  if (n < 2) throw InputError("moment oracle needs n >= 2, got " + std::to_string(n));
  log_gamma_half_n_ = std::lgamma(static_cast<long double>(n) / 2.0L);
}

long double MomentOracle::moment(const MultiIndex& alpha) const {
  if (alpha.size() != n_) {
    throw InputError("multi-index of length " + std::to_string(alpha.size()) +
                     " on S^" + std::to_string(n_ - 1));
  }
  // Gamma(n/2) prod Gamma((a_i + 1)/2) / (pi^{n/2} Gamma((n + |a|)/2))
  // with pi^{n/2} = Gamma(1/2)^n absorbed term by term, so alpha = 0 gives
  // exactly log 1 = 0.
  long double log_m = 0.0L;
  for (std::size_t i = 0; i < n_; ++i) {
    const int a = alpha[i];
    if (a & 1) return 0.0L;
    if (a > 0) log_m += std::lgamma((a + 1) / 2.0L) - kLogGammaHalf;
  }
  if (alpha.degree() == 0) return 1.0L;
  log_m += log_gamma_half_n_ - std::lgamma((static_cast<long double>(n_) + alpha.degree()) / 2.0L);
  return std::exp(log_m);
}

long double MomentOracle::integrate(const Polynomial& p) const {
  if (p.dimension() != n_) {
    throw InputError("polynomial in " + std::to_string(p.dimension()) +
                     " variables integrated on S^" + std::to_string(n_ - 1));
  }
  long double sum = 0.0L;
  for (const auto& [alpha, c] : p.terms()) sum += static_cast<long double>(c) * moment(alpha);
  return sum;
}

double surface_area(std::size_t n) {
  if (n < 1) throw InputError("surface_area needs n >= 1");
  const long double half = static_cast<long double>(n) / 2.0L;
  return static_cast<double>(2.0L * std::exp(half * kLogPi - std::lgamma(half)));
}

double ball_constant(std::size_t d, double lambda) {
  if (d < 1) throw InputError("ball_constant needs d >= 1");
  if (!(lambda > -0.5)) throw InputError("ball_constant needs lambda > -1/2");
  const long double l = lambda;
  const long double log_c = (static_cast<long double>(d) / 2.0L) * kLogPi +
                            std::lgamma(l + 0.5L) -
                            std::lgamma(l + (static_cast<long double>(d) + 1.0L) / 2.0L);
  return static_cast<double>(std::exp(log_c));
}

double monomial_moment(const MultiIndex& alpha, const MomentOracle& oracle) {
  return static_cast<double>(oracle.moment(alpha));
}

double integrate(const Polynomial& p, const MomentOracle& oracle) {
  return static_cast<double>(oracle.integrate(p));
}

long double interval_moment_ld(int k, long double nu) {
  if (k < 0) throw InputError("interval_moment needs k >= 0");
  if (!(nu > -0.5L)) throw InputError("interval_moment needs nu > -1/2");
  if (k & 1) return 0.0L;
  if (k == 0) return 1.0L;
  // Gamma((k+1)/2) Gamma(nu+1) / (Gamma(1/2) Gamma(nu + 1 + k/2))
  const long double log_m = std::lgamma((k + 1) / 2.0L) - kLogGammaHalf +
                            std::lgamma(nu + 1.0L) - std::lgamma(nu + 1.0L + k / 2.0L);
  return std::exp(log_m);
}

double interval_moment(int k, double nu) {
  return static_cast<double>(interval_moment_ld(k, nu));
}

}  // namespace spherebound
