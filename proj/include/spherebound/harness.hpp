#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "spherebound/bound.hpp"
#include "spherebound/polynomial.hpp"

namespace spherebound {

struct SweepRecord {
  int r = 0;
  double bound = 0.0;
  std::optional<double> lower_certificate;
  double runtime_ms = 0.0;
  std::size_t basis_size = 0;

  bool operator==(const SweepRecord&) const = default;
};

struct SweepOptions {
  BoundOptions bound;
  // Skip the cubature certificate when the product rule needs more nodes.
  std::size_t node_budget = 2'000'000;
  // 0 = hardware concurrency
  unsigned threads = 0;
};

struct Sweep {
  std::vector<SweepRecord> records;
  double f_ref = 0.0;
  bool f_ref_estimated = false;
};

// Number of quasi-random points used when f_ref has to be estimated.
inline constexpr std::size_t kReferenceSamples = 1'000'000;

// upper_bound for r = r_lo..r_hi (independent levels run concurrently, output
// in r order). Without f_ref the minimum is estimated by sampling.
Sweep sweep(const Polynomial& f, std::size_t n, int r_lo, int r_hi,
            std::optional<double> f_ref = std::nullopt, const SweepOptions& options = {});

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::pair<int, int> r_range{0, 0};
  double residual = 0.0;  // RMS of the log-log residuals
  std::size_t points = 0;
};

// Least squares of log(bound - f_ref) against log r. Records with r < 1 or
// a nonpositive gap are skipped. The window defaults to the upper half of
// the records' r span.
RateFit fit_rate(const std::vector<SweepRecord>& records, double f_ref,
                 std::optional<std::pair<int, int>> window = std::nullopt);

// Max over `samples` quasi-random sphere points of the spectral norm of the
// Hessian of f.
double hessian_norm_bound(const Polynomial& f, std::size_t samples = 10'000);

// 1.5 x hessian_norm_bound.
double default_taylor_constant(const Polynomial& f);

// g(x) = f(a) + grad f(a).(x - a) + C_f (1 - a.x), a linear majorant of f on
// the sphere touching it at a.
Polynomial linearize_at(const Polynomial& f, const Point& a, double c_f);

// Orthogonal U (a Householder reflection, or the identity) with U c = e_1.
Eigen::MatrixXd rotate_linear(const std::vector<double>& c, std::size_t n);

// The Motzkin form x3^6 + x1^4 x2^2 + x1^2 x2^4 - 3 x1^2 x2^2 x3^2.
Polynomial motzkin_form();

// Published level r = 0..9 bounds for the Motzkin form on S^2.
inline constexpr std::array<double, 10> kMotzkinTable = {
    0.1714, 0.0952, 0.0519, 0.0457, 0.0287, 0.0283, 0.0193, 0.0177, 0.0139, 0.0122};
inline constexpr double kTableTolerance = 5e-4;

struct TableRow {
  int r;
  double computed;
  double published;
  double deviation;
};

struct TableReport {
  std::vector<TableRow> rows;
  double max_deviation = 0.0;
  double runtime_ms = 0.0;
  bool passed = false;
};

TableReport reproduce_table1();

// header r,bound,lower_certificate,basis_size,runtime_ms. An absent
// certificate is an empty field.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                     int precision = 12);
std::vector<SweepRecord> read_sweep_csv(std::istream& is);

}  // namespace spherebound
