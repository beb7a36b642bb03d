// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "spherebound/basis.hpp"
#include "spherebound/bound.hpp"
#include "spherebound/cubature.hpp"
#include "spherebound/harness.hpp"
#include "spherebound/moments.hpp"
#include "spherebound/orthopoly.hpp"
#include "spherebound/sampling.hpp"

using namespace spherebound;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome table_reproduction() {
  const auto report = reproduce_table1();
  std::size_t largest = 0;
  for (int r = 0; r <= 9; ++r) largest = std::max(largest, sphere_basis_size(3, r));
  const bool ok = report.max_deviation <= 5e-4 && largest <= 100 && report.runtime_ms < 5000;
  return {ok, fmt("max |dev| %.2e (<= 5e-4), largest matrix %zux%zu, %.0f ms", report.max_deviation,
                  largest, largest, report.runtime_ms)};
}

Outcome exact_mean() {
  const double v = upper_bound(motzkin_form(), 3, 0).value;
  const double err = std::abs(v - 6.0 / 35.0);
  return {err <= 1e-12, fmt("level 0 = %.17g, |v - 6/35| = %.1e (<= 1e-12)", v, err)};
}

Outcome chebyshev_root() {
  double worst = 0;
  for (int r = 0; r <= 49; ++r) {
    worst = std::max(worst, std::abs(smallest_root({-0.5, -0.5}, r + 1) + std::cos(pi / (2 * r + 2))));
  }
  return {worst <= 1e-13, fmt("max error over r <= 49: %.1e (<= 1e-13)", worst)};
}

Outcome circle_bracket() {
  int lower_bad = 0, upper_bad = 0, first_bad = -1;
  double worst_lower = 0;
  for (int r = 1; r <= 20; ++r) {
    const double v = upper_bound(Polynomial::variable(2, 0), 2, r).value;
    const double lo = -std::cos(pi / (2 * r + 1)), hi = -std::cos(pi / (2 * r + 2));
    if (lo > v + 1e-10) {
      ++lower_bad;
      worst_lower = std::max(worst_lower, lo - v);
      if (first_bad < 0) first_bad = r;
    }
    if (v > hi + 1e-10) ++upper_bad;
  }
  return {lower_bad == 0 && upper_bad == 0,
          fmt("lower end violated for %d/20 levels (first r = %d, worst by %.3e), upper end violated "
              "for %d/20",
              lower_bad, first_bad, worst_lower, upper_bad)};
}

Outcome rate_exponent() {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = sweep(Polynomial::variable(n, n - 1), n, 4, 16, -1.0);
    const double secs = seconds_since(start);
    const auto fit = fit_rate(s.records, -1.0, std::pair{4, 16});
    const bool in = fit.slope >= -2.3 && fit.slope <= -1.7 && secs < 60;
    ok = ok && in;
    detail += fmt("%sn=%zu slope %.4f (%.2fs)", detail.empty() ? "" : ", ", n, fit.slope, secs);
  }
  return {ok, detail + "; window [-2.3, -1.7]"};
}

Outcome tightness() {
  double lowest = 1e300;
  for (std::size_t n : {3u, 4u}) {
    for (int r = 4; r <= 20; ++r) {
      const double v = (1 + cubature_lower_bound(Polynomial::variable(n, n - 1), n, r)) * r * r;
      lowest = std::min(lowest, v);
    }
  }
  return {lowest >= 0.5, fmt("min (1 + lower) r^2 = %.4f (>= 0.5)", lowest)};
}

Outcome cubature_exactness() {
  double worst_exact = 0, weakest_fail = 1e300;
  for (std::size_t n : {3u, 4u}) {
    for (int d = 1; d <= 8; ++d) {
      const auto rule = sphere_product_rule(n, d);
      worst_exact = std::max(worst_exact, sphere_exactness_error(rule, 2 * d - 1));
      weakest_fail = std::min(weakest_fail, sphere_exactness_error(rule, 2 * d));
    }
  }
  return {worst_exact <= 1e-10 && weakest_fail > 1e-6,
          fmt("max rel error to degree 2d-1: %.1e (<= 1e-10); degree 2d: %.1e (> 1e-6)", worst_exact,
              weakest_fail)};
}

Outcome slice_moments() {
  double worst = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const MomentOracle o(n);
    for (int k = 0; k <= 20; k += 2) {
      const double a = interval_moment(k, (static_cast<double>(n) - 2) / 2);
      const double b = monomial_moment(MultiIndex::unit(n, 0, k), o);
      worst = std::max(worst, std::abs(a - b) / b);
    }
  }
  return {worst <= 1e-12, fmt("max rel difference %.1e (<= 1e-12)", worst)};
}

Outcome rational_hierarchy() {
  const auto m = motzkin_form();
  double worst = 0;
  for (int r = 0; r <= 5; ++r) {
    worst = std::max(worst, std::abs(rational_upper_bound(m, Polynomial::constant(3, 1.0), 3, r).value -
                                     upper_bound(m, 3, r).value));
  }
  const auto p = Polynomial::variable(2, 0);
  const auto q = parse_poly("2 + x1", 2);
  bool monotone = true;
  double prev = 1e300, last = 0;
  for (int r = 0; r <= 12; ++r) {
    last = rational_upper_bound(p, q, 2, r).value;
    if (last > prev + 1e-10) monotone = false;
    prev = last;
  }
  const double gap = std::abs(last + 1);
  return {worst <= 1e-10 && monotone && gap <= 0.05,
          fmt("q = 1 max diff %.1e (<= 1e-10); x1/(2+x1): %s, r=12 value %.5f, |v + 1| = %.4f (<= 0.05)",
              worst, monotone ? "nonincreasing" : "NOT nonincreasing", last, gap)};
}

Outcome density_modes() {
  const auto m = motzkin_form();
  const double s = 1 / std::sqrt(3.0);
  const Point e1{1, 0, 0}, diag{s, s, s};
  const auto d9 = extract_density(upper_bound(m, 3, 9));
  const auto d3 = extract_density(upper_bound(m, 3, 3));
  const auto grid = density_grid(d9, 3, 100);
  const auto peaks = grid_local_maxima(grid);
  double top = 0;
  for (const auto& p : peaks) top = std::max(top, p.h);
  int modes = 0, far = 0;
  double worst = 0;
  for (const auto& p : peaks) {
    if (p.h < 0.5 * top) continue;
    ++modes;
    const auto x = spherical_point(p.theta, p.phi);
    const double c = s * (std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]));
    const double dist = std::acos(std::min(1.0, c));
    worst = std::max(worst, dist);
    if (dist > 0.15) ++far;
  }
  const double h9e = evaluate(d9.h, e1), h9d = evaluate(d9.h, diag);
  const double h3e = evaluate(d3.h, e1), h3d = evaluate(d3.h, diag);
  const bool ok = modes > 0 && far == 0 && h9e < h9d && h3e > h3d;
  return {ok, fmt("r=9: %d of %d dominant modes farther than 0.15 rad from (+-1,+-1,+-1)/sqrt3 (max "
                  "%.3f rad); h(e1)=%.3g vs h(diag)=%.3g; r=3: h(e1)=%.3g vs h(diag)=%.3g",
                  far, modes, worst, h9e, h9d, h3e, h3d)};
}

Polynomial random_poly(std::size_t n, int max_deg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  Polynomial p(n);
  for (int t = 0; t < 5; ++t) {
    MultiIndex a(n);
    const int deg = 1 + t % max_deg;
    for (int k = 0; k < deg; ++k) {
      const auto i = static_cast<std::size_t>(pick(rng));
      a.set(i, a[i] + 1);
    }
    p += Polynomial::monomial(a, c(rng));
  }
  return p;
}

Outcome invariance_suite() {
  std::mt19937_64 rng(20240611);
  int failures = 0, checks = 0;
  double rescale = 0, shift = 0, scale = 0, mono = 0, sound = 0, orth = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto f = random_poly(n, 4, rng);
    const double fmin = sampled_minimum(f, 100'000).value;
    double prev = 1e300;
    for (int r = 0; r <= 6; ++r) {
      const double v = upper_bound(f, n, r).value;
      mono = std::max(mono, v - prev);
      sound = std::max(sound, fmin - v);
      prev = v;
      if (r % 2 == 1) {
        shift = std::max(shift, std::abs(upper_bound(f + 1.7, n, r).value - (v + 1.7)));
        scale = std::max(scale, std::abs(upper_bound(2.9 * f, n, r).value - 2.9 * v));
        const auto pencil = make_pencil(f, sphere_basis(n, r));
        Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> a(pencil.a, pencil.b, Eigen::EigenvaluesOnly);
        Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> b(7.3L * pencil.a, 7.3L * pencil.b,
                                                           Eigen::EigenvaluesOnly);
        rescale = std::max(rescale, static_cast<double>((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff()));
      }
      ++checks;
    }
  }
  std::normal_distribution<double> z;
  for (std::size_t n : {2u, 3u, 4u}) {
    const double ref = upper_bound(Polynomial::variable(n, 0), n, 5).value;
    for (int k = 0; k < 20; ++k) {
      std::vector<double> c(n);
      double s = 0;
      for (auto& v : c) s += (v = z(rng)) * v;
      for (auto& v : c) v /= std::sqrt(s);
      orth = std::max(orth, std::abs(upper_bound(Polynomial::linear(c), n, 5).value - ref));
    }
  }
  failures += rescale > 1e-12;
  failures += shift > 1e-10;
  failures += scale > 1e-10;
  failures += mono > 1e-10;
  failures += sound > 1e-9;
  failures += orth > 1e-8;
  return {failures == 0,
          fmt("rescale %.1e, f+c %.1e, lambda f %.1e, monotonicity %.1e, soundness %.1e, orthogonal "
              "%.1e (%d levels)",
              rescale, shift, scale, mono, sound, orth, checks)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Motzkin table r=0..9", table_reproduction},
      {"exact mean at r=0", exact_mean},
      {"Chebyshev closed form", chebyshev_root},
      {"S^1 bracket r=1..20", circle_bracket},
      {"rate exponent x_n, n=3,4,5", rate_exponent},
      {"cubature tightness", tightness},
      {"cubature exactness", cubature_exactness},
      {"projected moment identity", slice_moments},
      {"rational hierarchy", rational_hierarchy},
      {"density modes", density_modes},
      {"invariance suite", invariance_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
