#include "spherebound/sampling.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <boost/math/special_functions/erf.hpp>
#include <boost/random/sobol.hpp>

#include "spherebound/errors.hpp"

namespace spherebound {

namespace {

void normalize(Point& x) {
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
}

}  // namespace

std::vector<Point> quasi_random_sphere_points(std::size_t n, std::size_t count,
                                              std::uint64_t skip) {
  if (n < 1) throw InputError("sphere sampling needs n >= 1");
  boost::random::sobol engine(static_cast<unsigned>(n));
  engine.discard(skip * n);
  const double scale = 1.0 / (static_cast<double>(engine.max()) + 1.0);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (static_cast<double>(engine()) + 0.5) * scale;
      x[i] = std::sqrt(2.0) * boost::math::erf_inv(2.0 * u - 1.0);
    }
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    if (norm2 == 0.0) continue;
    normalize(x);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Point> random_sphere_points(std::size_t n, std::size_t count,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    Point x(n);
    double norm2 = 0.0;
    for (double& v : x) {
      v = normal(rng);
      norm2 += v * v;
    }
    if (norm2 == 0.0) continue;
    normalize(x);
    out.push_back(std::move(x));
  }
  return out;
}

SampledMinimum sampled_minimum(const Polynomial& f, std::size_t count) {
  SampledMinimum best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& x : quasi_random_sphere_points(f.dimension(), count)) {
    const double v = evaluate(f, x);
    if (v < best.value) best = {v, x};
  }
  return best;
}

}  // namespace spherebound
