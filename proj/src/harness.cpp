#include "spherebound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "spherebound/cubature.hpp"
#include "spherebound/errors.hpp"
#include "spherebound/sampling.hpp"

namespace spherebound {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Sweep sweep(const Polynomial& f, std::size_t n, int r_lo, int r_hi,
            std::optional<double> f_ref, const SweepOptions& options) {
  if (r_lo < 0 || r_lo > r_hi) throw InputError("sweep needs 0 <= r_lo <= r_hi");
  if (f.dimension() != n) throw InputError("polynomial dimension differs from n");

  Sweep out;
  if (f_ref) {
    out.f_ref = *f_ref;
  } else {
    out.f_ref = sampled_minimum(f, kReferenceSamples).value;
    out.f_ref_estimated = true;
  }

  const auto count = static_cast<std::size_t>(r_hi - r_lo + 1);
  out.records.resize(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      const int r = r_lo + static_cast<int>(k);
      try {
        const auto start = std::chrono::steady_clock::now();
        const auto res = upper_bound(f, n, r, options.bound);
        SweepRecord rec;
        rec.r = r;
        rec.bound = res.value;
        rec.basis_size = res.basis.size();
        const int d = cubature_parameter(f.degree(), r);
        if (sphere_product_rule_size(n, d) <= options.node_budget) {
          rec.lower_certificate = cubature_lower_bound(f, n, r);
        }
        rec.runtime_ms = elapsed_ms(start);
        out.records[k] = rec;
      } catch (const NumericalError& e) {
        errors[k] = std::make_exception_ptr(
            NumericalError("level r = " + std::to_string(r) + ": " + e.what()));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

RateFit fit_rate(const std::vector<SweepRecord>& records, double f_ref,
                 std::optional<std::pair<int, int>> window) {
  if (records.empty()) throw InputError("rate fit: no records");
  std::pair<int, int> range;
  if (window) {
    range = *window;
  } else {
    const auto [lo, hi] = std::minmax_element(
        records.begin(), records.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
    range = {lo->r + (hi->r - lo->r) / 2, hi->r};
  }

  std::vector<double> xs, ys;
  std::size_t nonpositive = 0;
  for (const auto& rec : records) {
    if (rec.r < range.first || rec.r > range.second || rec.r < 1) continue;
    const double gap = rec.bound - f_ref;
    if (!(gap > 0.0)) {
      ++nonpositive;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(rec.r)));
    ys.push_back(std::log(gap));
  }
  if (xs.size() < 4) {
    throw InputError("rate fit: " + std::to_string(xs.size()) +
                     " usable records in the window (need 4)" +
                     (nonpositive ? ", " + std::to_string(nonpositive) + " with nonpositive gap" : ""));
  }

  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_range = range;
  fit.points = xs.size();
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

double hessian_norm_bound(const Polynomial& f, std::size_t samples) {
  const std::size_t n = f.dimension();
  const auto h = hessian(f);
  double best = 0.0;
  Eigen::MatrixXd m(n, n);
  for (const auto& x : quasi_random_sphere_points(n, samples)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = evaluate(h[i][j], x);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    best = std::max(best, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return best;
}

double default_taylor_constant(const Polynomial& f) { return 1.5 * hessian_norm_bound(f); }

Polynomial linearize_at(const Polynomial& f, const Point& a, double c_f) {
  const std::size_t n = f.dimension();
  if (a.size() != n) throw InputError("linearization point has the wrong dimension");
  double norm2 = 0.0;
  for (double v : a) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw InputError("linearization point is not on the sphere");
  }
  // f(a) - grad.a + C_f + sum_i (grad_i - C_f a_i) x_i
  const auto grad = gradient(f);
  std::vector<double> lin(n);
  double c0 = evaluate(f, a) + c_f;
  for (std::size_t i = 0; i < n; ++i) {
    const double gi = evaluate(grad[i], a);
    c0 -= gi * a[i];
    lin[i] = gi - c_f * a[i];
  }
  return Polynomial::linear(lin, c0);
}

Eigen::MatrixXd rotate_linear(const std::vector<double>& c, std::size_t n) {
  if (c.size() != n) throw InputError("rotate_linear: vector has the wrong dimension");
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(n));
  if (std::abs(v.norm() - 1.0) > 1e-12) throw InputError("rotate_linear: c must be a unit vector");
  // H = I - 2 u u^T / u^T u with u = c + sign(c_1) e_1 maps c to -sign(c_1) e_1;
  // flip the sign of H when c_1 >= 0.
  const double sign = v(0) >= 0.0 ? 1.0 : -1.0;
  Eigen::VectorXd u = v;
  u(0) += sign;
  const Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * u * u.transpose() / u.squaredNorm();
  return sign > 0.0 ? Eigen::MatrixXd(-h) : h;
}

Polynomial motzkin_form() {
  return parse_poly("x3^6 + x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2*x3^2", 3);
}

TableReport reproduce_table1() {
  TableReport report;
  const auto start = std::chrono::steady_clock::now();
  SweepOptions options;
  options.node_budget = 0;
  const auto result = sweep(motzkin_form(), 3, 0, 9, 0.0, options);
  report.runtime_ms = elapsed_ms(start);
  for (const auto& rec : result.records) {
    const double published = kMotzkinTable[static_cast<std::size_t>(rec.r)];
    const double dev = std::abs(rec.bound - published);
    report.rows.push_back({rec.r, rec.bound, published, dev});
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  report.passed = report.max_deviation <= kTableTolerance;
  return report;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records, int precision) {
  os << "r,bound,lower_certificate,basis_size,runtime_ms\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return std::string(buf);
  };
  for (const auto& rec : records) {
    os << rec.r << ',' << fmt(rec.bound) << ','
       << (rec.lower_certificate ? fmt(*rec.lower_certificate) : std::string()) << ','
       << rec.basis_size << ',' << fmt(rec.runtime_ms) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "r,bound,lower_certificate,basis_size,runtime_ms") {
    throw InputError("sweep CSV: unexpected header");
  }
  std::vector<SweepRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 5) {
      throw InputError("sweep CSV line " + std::to_string(lineno) + ": expected 5 fields");
    }
    try {
      SweepRecord rec;
      rec.r = std::stoi(fields[0]);
      rec.bound = std::stod(fields[1]);
      if (!fields[2].empty()) rec.lower_certificate = std::stod(fields[2]);
      rec.basis_size = std::stoul(fields[3]);
      rec.runtime_ms = std::stod(fields[4]);
      out.push_back(rec);
    } catch (const std::logic_error&) {
      throw InputError("sweep CSV line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return out;
}

}  // namespace spherebound
