#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spherebound/bound.hpp"
#include "spherebound/cubature.hpp"
#include "spherebound/errors.hpp"
#include "spherebound/harness.hpp"

namespace sb = spherebound;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitTableDiff = 4;

// --poly accepts either a path to a file holding the polynomial or the text itself.
sb::Polynomial load_poly(const std::string& arg, std::size_t n) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sb::parse_poly(text, n);
  }
  return sb::parse_poly(arg, n);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw sb::InputError("cannot open " + path + " for writing");
  return out;
}

sb::Solver parse_solver(const std::string& name) {
  if (name == "auto") return sb::Solver::automatic;
  if (name == "dense") return sb::Solver::dense;
  if (name == "zonal") return sb::Solver::zonal;
  throw sb::InputError("unknown solver '" + name + "'");
}

void print_result(const sb::BoundResult& res) {
  std::printf("n = %zu  r = %d  basis = %zu\n", res.n, res.r, res.basis.size());
  std::printf("bound = %.15g\n", res.value);
  if (res.condition_number) std::printf("cond(B) = %.3e\n", *res.condition_number);
  if (res.condition_warning) std::fprintf(stderr, "warning: Gram matrix is ill-conditioned\n");
  if (res.multiplicity_warning) {
    std::fprintf(stderr, "warning: smallest eigenvalue is not simple; density is not unique\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds for polynomial minimization on the unit sphere"};
  app.require_subcommand(1);

  std::string poly, p_text, q_text, json_out, csv_out, solver_name = "auto", dump_dir;
  std::size_t n = 0;
  int r = 0, r_min = 0, r_max = 0, resolution = 0, d = 0;
  std::optional<double> fmin;

  auto* bound = app.add_subcommand("bound", "bound at a single level r");
  bound->add_option("--poly", poly, "polynomial text or file")->required();
  bound->add_option("--n", n, "number of variables")->required();
  bound->add_option("--r", r, "level")->required();
  bound->add_option("--json", json_out, "write the result as JSON");
  bound->add_option("--solver", solver_name, "auto, dense or zonal");
  bound->add_option("--dump-matrices", dump_dir, "write A_f and B to this directory");

  auto* sweep = app.add_subcommand("sweep", "bounds for a range of levels");
  sweep->add_option("--poly", poly, "polynomial text or file")->required();
  sweep->add_option("--n", n, "number of variables")->required();
  sweep->add_option("--r-min", r_min, "first level")->required();
  sweep->add_option("--r-max", r_max, "last level")->required();
  sweep->add_option("--fmin", fmin, "known minimum (estimated by sampling otherwise)");
  sweep->add_option("--csv", csv_out, "write records as CSV");

  auto* rational = app.add_subcommand("rational", "bound for min p/q");
  rational->add_option("--p", p_text, "numerator")->required();
  rational->add_option("--q", q_text, "denominator, positive on the sphere")->required();
  rational->add_option("--n", n, "number of variables")->required();
  rational->add_option("--r", r, "level")->required();

  auto* grid = app.add_subcommand("density-grid", "optimal density sampled on S^2");
  grid->add_option("--poly", poly, "polynomial text or file")->required();
  grid->add_option("--n", n, "number of variables (3)")->required();
  grid->add_option("--r", r, "level")->required();
  grid->add_option("--resolution", resolution, "grid steps per angle")->required();
  grid->add_option("--csv", csv_out, "output file")->required();

  auto* cub = app.add_subcommand("cubature", "product cubature rule on the sphere");
  cub->add_option("--n", n, "number of variables")->required();
  cub->add_option("--d", d, "points per angle")->required();
  cub->add_option("--csv", csv_out, "write nodes and weights as CSV");

  auto* table = app.add_subcommand("reproduce-table1", "Motzkin form on S^2, r = 0..9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*bound) {
      sb::BoundOptions options;
      options.solver = parse_solver(solver_name);
      const auto f = load_poly(poly, n);
      if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        const auto pencil = sb::make_pencil(f, sb::sphere_basis(n, r));
        auto a = open_output(dump_dir + "/A.txt");
        sb::write_matrix(a, pencil.a);
        auto b = open_output(dump_dir + "/B.txt");
        sb::write_matrix(b, pencil.b);
      }
      const auto res = sb::upper_bound(f, n, r, options);
      print_result(res);
      if (!json_out.empty()) open_output(json_out) << sb::to_json(res).dump(2) << '\n';
    } else if (*sweep) {
      const auto f = load_poly(poly, n);
      const auto result = sb::sweep(f, n, r_min, r_max, fmin);
      std::printf("f_ref = %.12g%s\n", result.f_ref, result.f_ref_estimated ? " (estimated)" : "");
      if (csv_out.empty()) {
        sb::write_sweep_csv(std::cout, result.records);
      } else {
        auto out = open_output(csv_out);
        sb::write_sweep_csv(out, result.records);
      }
      try {
        const auto fit = sb::fit_rate(result.records, result.f_ref);
        std::printf("rate: slope %.4f over r = %d..%d (%zu points, rms %.3g)\n", fit.slope,
                    fit.r_range.first, fit.r_range.second, fit.points, fit.residual);
      } catch (const sb::InputError& e) {
        std::printf("rate: not fitted (%s)\n", e.what());
      }
    } else if (*rational) {
      const auto p = load_poly(p_text, n);
      const auto q = load_poly(q_text, n);
      print_result(sb::rational_upper_bound(p, q, n, r));
    } else if (*grid) {
      const auto f = load_poly(poly, n);
      const auto res = sb::upper_bound(f, n, r);
      const auto g = sb::density_grid(sb::extract_density(res), n, resolution);
      auto out = open_output(csv_out);
      sb::write_density_csv(out, g);
      const auto peaks = sb::grid_local_maxima(g);
      std::printf("bound = %.15g, %zu local maxima\n", res.value, peaks.size());
    } else if (*cub) {
      const auto rule = sb::sphere_product_rule(n, d);
      std::printf("%zu nodes, exact to degree %d\n", rule.size(), rule.exactness_degree);
      if (!csv_out.empty()) {
        auto out = open_output(csv_out);
        sb::write_rule_csv(out, rule);
      }
    } else if (*table) {
      const auto report = sb::reproduce_table1();
      std::printf(" r   computed     published   deviation\n");
      for (const auto& row : report.rows) {
        std::printf("%2d   %.7f    %.4f      %.2e%s\n", row.r, row.computed, row.published,
                    row.deviation, row.deviation > sb::kTableTolerance ? "  <-- exceeds" : "");
      }
      std::printf("max deviation %.2e (tolerance %.0e), %.0f ms\n", report.max_deviation,
                  sb::kTableTolerance, report.runtime_ms);
      if (!report.passed) return kExitTableDiff;
    }
  } catch (const sb::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const sb::NumericalError& e) {
    if (*sweep || *table || *cub) {
      std::fprintf(stderr, "numerical failure: %s\n", e.what());
    } else {
      std::fprintf(stderr, "numerical failure at r = %d: %s\n", r, e.what());
    }
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return 0;
}
