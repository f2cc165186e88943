// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the ultraslow-fde developers

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "CLI11.hpp"
#include "ultraslow/convergence.hpp"
#include "ultraslow/fractional_laplacian.hpp"
#include "ultraslow/problems.hpp"
#include "ultraslow/reporting.hpp"
#include "ultraslow/selftest.hpp"
#include "ultraslow/solver1d.hpp"
#include "ultraslow/solver2d.hpp"
#include "ultraslow/spatial_kernels.hpp"
#include "ultraslow/temporal_kernels.hpp"

namespace {

ultraslow::Scheme parse_scheme(const std::string& name) {
  return name == "l12" ? ultraslow::Scheme::L12 : ultraslow::Scheme::L2Sigma;
}

ultraslow::Method parse_method(const std::string& name) {
  if (name == "toeplitz") return ultraslow::Method::Toeplitz;
  if (name == "cg") return ultraslow::Method::Cg;
  if (name == "dense") return ultraslow::Method::Dense;
  return ultraslow::Method::Auto;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

/// Writes text to the file at `path`, or to stdout when the path is empty.
void emit_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed while writing " + path);
}

void report_diagnostics(const ultraslow::Diagnostics& diagnostics) {
  for (const std::string& warning : diagnostics.warnings)
    std::cerr << "warning: " << warning << '\n';
}

struct SolveArgs {
  std::string scheme = "l2sigma";
  double alpha = 0.5;
  double beta = 1.5;
  double origin = 1.0;
  double horizon = 2.0;
  double half_width = 1.0;
  Eigen::Index steps = 0;
  Eigen::Index cells = 0;
  Eigen::Index reference_cells = 0;
  std::string problem;
  std::string method = "auto";
  std::string format = "csv";
  std::string out = "trajectory.csv";
};

void require_benchmark_window(const SolveArgs& args) {
  if (args.origin != 1.0 || args.horizon != 2.0)
    throw CLI::ValidationError(
        "--problem", args.problem + " is defined on the time window [1,2]; leave "
                                    "--atilde and --T at their defaults or use --problem custom");
}

void run_solve1d(const SolveArgs& args) {
  ultraslow::Solver1dConfig config;
  config.scheme = parse_scheme(args.scheme);
  config.alpha = args.alpha;
  config.beta = args.beta;
  config.origin = args.origin;
  config.horizon = args.horizon;
  config.cells = args.cells;
  config.steps = args.steps;
  config.method = parse_method(args.method);
  if (args.problem == "example1") {
    require_benchmark_window(args);
    const ultraslow::LogQuartic1d problem{args.alpha, args.beta};
    config.source = [problem](double x, double t) { return problem.source(x, t); };
  } else {
    config.initial = [](double x) { return std::sin(std::numbers::pi * x); };
  }

  const ultraslow::Solver1dResult result = ultraslow::solve_1d(config);
  report_diagnostics(result.diagnostics);

  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + args.out);
  ultraslow::write_trajectory_csv(out, result, config);
  if (!out) throw std::runtime_error("failed while writing " + args.out);
  std::cout << "wrote " << args.out << " (" << result.history.rows() << " levels x "
            << result.nodes.size() << " nodes)\n";
}

void run_solve2d(const SolveArgs& args) {
  ultraslow::Solver2dConfig config;
  config.scheme = parse_scheme(args.scheme);
  config.alpha = args.alpha;
  config.beta = args.beta;
  config.half_width = args.half_width;
  config.origin = args.origin;
  config.horizon = args.horizon;
  config.cells = args.cells;
  config.steps = args.steps;

  if (args.problem == "example2") {
    require_benchmark_window(args);
    if (args.half_width != 1.0)
      throw CLI::ValidationError("--problem",
                                 "example2 is defined on (-1,1)^2; leave --L at its default");
    Eigen::Index reference = args.reference_cells;
    if (reference <= 0) {
      reference = 512;
      if (reference % args.cells != 0 && args.cells > 0)
        reference = args.cells * ((reference + args.cells - 1) / args.cells);
    }
    const ultraslow::DiscreteSource2d source =
        ultraslow::make_discrete_source_2d(args.alpha, args.beta, args.cells, reference);
    config.source = [source](double t) { return source.at(t); };
  } else if (args.cells >= 2) {
    // Decay probe: zero source, smooth initial bump vanishing at the boundary.
    const Eigen::Index n = args.cells - 1;
    const double h = 2.0 * args.half_width / static_cast<double>(args.cells);
    Eigen::VectorXd initial(n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double x = (-args.half_width + h * static_cast<double>(j + 1)) / args.half_width;
      const double px = std::pow(1.0 - x * x, 4.0);
      for (Eigen::Index k = 0; k < n; ++k) {
        const double y = (-args.half_width + h * static_cast<double>(k + 1)) / args.half_width;
        initial[j * n + k] = px * std::pow(1.0 - y * y, 4.0);
      }
    }
    config.initial = std::move(initial);
  }

  const ultraslow::Solver2dResult result = ultraslow::solve_2d(config);
  report_diagnostics(result.diagnostics);

  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + args.out);
  if (args.format == "binary")
    ultraslow::write_trajectory_binary(out, result, config);
  else
    ultraslow::write_trajectory_csv(out, result, config);
  if (!out) throw std::runtime_error("failed while writing " + args.out);
  std::cout << "wrote " << args.out << " (" << result.history.rows() << " levels x "
            << result.nodes.size() << "^2 interior nodes)\n";
}

struct KernelsArgs {
  std::string scheme;
  double alpha = 0.5;
  double origin = 1.0;
  double horizon = 2.0;
  Eigen::Index steps = 0;
  Eigen::Index row = 0;
  double beta = 1.5;
  Eigen::Index cells = 0;
  Eigen::Index oversample = 0;
  std::string out;
};

void run_kernels(const KernelsArgs& args, bool temporal, bool coefficient_table) {
  std::ostringstream text;
  if (temporal) {
    const ultraslow::TemporalGrid<double> grid(args.origin, args.horizon, args.steps);
    const Eigen::VectorXd row = parse_scheme(args.scheme) == ultraslow::Scheme::L2Sigma
                                    ? ultraslow::l2sigma_weights(args.alpha, grid, args.row)
                                    : ultraslow::l12_weights(args.alpha, grid, args.row);
    text << "i,c_i\n";
    for (Eigen::Index i = 0; i < row.size(); ++i)
      text << i << ',' << format_double(row[i]) << '\n';
  } else if (coefficient_table) {
    const Eigen::MatrixXd table =
        ultraslow::fcd_table(args.beta, args.cells + 1, args.oversample);
    text << "j,k,a_jk\n";
    for (Eigen::Index j = 0; j < table.rows(); ++j)
      for (Eigen::Index k = 0; k < table.cols(); ++k)
        text << j << ',' << k << ',' << format_double(table(j, k)) << '\n';
  } else {
    const Eigen::VectorXd column = ultraslow::riesz_kernel(args.beta, args.cells + 1);
    text << "k,r_k\n";
    for (Eigen::Index k = 0; k < column.size(); ++k)
      text << k << ',' << format_double(column[k]) << '\n';
  }
  emit_text(args.out, text.str());
}

struct ConvergeArgs {
  std::string mode;
  std::string scheme = "l2sigma";
  double alpha = 0.5;
  double beta = 1.5;
  Eigen::Index cells = 0;
  Eigen::Index steps = 0;
  std::vector<Eigen::Index> ladder;
  std::string method = "auto";
  std::string format = "csv";
  std::string out;
  std::string spec_path;
};

/// Fills converge options from an INI-style file (keys match the long flag
/// names).  Values given on the command line keep precedence.
void apply_study_config(CLI::App* converge, const std::string& path) {
  CLI::ConfigINI reader;
  const std::vector<CLI::ConfigItem> items = reader.from_file(path);
  for (const CLI::ConfigItem& item : items) {
    if (!item.parents.empty() || item.name == "spec")
      throw CLI::ValidationError("--spec", "unsupported key in " + path + ": " + item.fullname());
    CLI::Option* option = converge->get_option_no_throw("--" + item.name);
    if (option == nullptr)
      throw CLI::ValidationError("--spec", "unknown key in " + path + ": " + item.name);
    if (option->count() > 0) continue;
    for (const std::string& input : item.inputs) option->add_result(input);
    option->run_callback();
  }
}

void require_from_cli_or_config(const CLI::App* converge, const char* name) {
  if (converge->count(name) == 0)
    throw CLI::RequiredError(std::string(name) + " (flag or study-file key)");
}

void run_converge(const ConvergeArgs& args) {
  const ultraslow::Scheme scheme = parse_scheme(args.scheme);
  const ultraslow::Method method = parse_method(args.method);
  ultraslow::ConvergenceStudy study;
  if (args.mode == "spatial-1d") {
    if (args.steps < 1)
      throw CLI::ValidationError("--steps", "spatial studies need the fixed step count");
    study = ultraslow::spatial_study_1d(scheme, args.alpha, args.beta, args.ladder, args.steps,
                                        method);
  } else if (args.mode == "temporal-1d") {
    if (args.cells < 2)
      throw CLI::ValidationError("--cells", "temporal studies need the fixed mesh size");
    study = ultraslow::temporal_study_1d(scheme, args.alpha, args.beta, args.cells, args.ladder,
                                         method);
  } else if (args.mode == "spatial-2d") {
    if (args.steps < 1)
      throw CLI::ValidationError("--steps", "spatial studies need the fixed step count");
    study = ultraslow::spatial_study_2d(scheme, args.alpha, args.beta, args.ladder, args.steps);
  } else {
    if (args.cells < 2)
      throw CLI::ValidationError("--cells", "temporal studies need the fixed mesh size");
    study = ultraslow::temporal_study_2d(scheme, args.alpha, args.beta, args.cells, args.ladder);
  }
  emit_text(args.out,
            args.format == "markdown" ? ultraslow::to_markdown(study) : ultraslow::to_csv(study));
}

int run_selftest(int row_samples, int field_samples, unsigned seed) {
  const std::vector<ultraslow::PropertyReport> reports =
      ultraslow::run_property_suites(row_samples, field_samples, seed);
  int failures = 0;
  for (const ultraslow::PropertyReport& report : reports) {
    std::cout << (report.ok() ? "[PASS] " : "[FAIL] ") << report.name << " (" << report.checks
              << " checks)\n";
    for (const std::string& violation : report.violations)
      std::cout << "       " << violation << '\n';
    if (!report.ok()) ++failures;
  }
  if (failures > 0) std::cout << failures << " suite(s) failed\n";
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-difference solver for ultra-slow diffusion: a Caputo-Hadamard "
      "time derivative of order alpha in (0,1) coupled with a Riesz space "
      "derivative (1D) or the integral fractional Laplacian (2D) of order "
      "beta in (1,2)."};
  app.require_subcommand(1);
  int exit_code = 0;

  SolveArgs solve1d_args;
  solve1d_args.problem = "example1";
  CLI::App* solve1d = app.add_subcommand(
      "solve1d", "Run one 1D solve and write the trajectory as CSV (columns n,j,x,t,U)");
  solve1d->add_option("--scheme", solve1d_args.scheme, "Temporal scheme")
      ->check(CLI::IsMember({"l2sigma", "l12"}))
      ->capture_default_str();
  solve1d->add_option("--alpha", solve1d_args.alpha, "Temporal derivative order in (0,1)")
      ->required();
  solve1d->add_option("--beta", solve1d_args.beta, "Spatial derivative order in (1,2)")
      ->required();
  solve1d->add_option("--atilde", solve1d_args.origin, "Left end of the time window")
      ->capture_default_str();
  solve1d->add_option("--T", solve1d_args.horizon, "Right end of the time window")
      ->capture_default_str();
  solve1d->add_option("--N", solve1d_args.steps, "Number of time steps")->required();
  solve1d->add_option("--M", solve1d_args.cells, "Number of spatial cells")->required();
  solve1d
      ->add_option("--problem", solve1d_args.problem,
                   "example1: manufactured log-quartic benchmark on [0,1]x[1,2]; "
                   "custom: zero source with a sine initial profile")
      ->check(CLI::IsMember({"example1", "custom"}))
      ->capture_default_str();
  solve1d->add_option("--method", solve1d_args.method, "Per-step linear solver")
      ->check(CLI::IsMember({"auto", "toeplitz", "cg", "dense"}))
      ->capture_default_str();
  solve1d->add_option("--out", solve1d_args.out, "Output CSV path")->capture_default_str();
  solve1d->callback([&solve1d_args] { run_solve1d(solve1d_args); });

  SolveArgs solve2d_args;
  solve2d_args.problem = "example2";
  CLI::App* solve2d = app.add_subcommand(
      "solve2d",
      "Run one 2D solve and write the trajectory as CSV (columns n,j,k,x,y,t,U) or binary");
  solve2d->add_option("--scheme", solve2d_args.scheme, "Temporal scheme")
      ->check(CLI::IsMember({"l2sigma", "l12"}))
      ->capture_default_str();
  solve2d->add_option("--alpha", solve2d_args.alpha, "Temporal derivative order in (0,1)")
      ->required();
  solve2d->add_option("--beta", solve2d_args.beta, "Spatial derivative order in (1,2)")
      ->required();
  solve2d->add_option("--atilde", solve2d_args.origin, "Left end of the time window")
      ->capture_default_str();
  solve2d->add_option("--T", solve2d_args.horizon, "Right end of the time window")
      ->capture_default_str();
  solve2d->add_option("--L", solve2d_args.half_width, "Domain half-width: the square (-L,L)^2")
      ->capture_default_str();
  solve2d->add_option("--N", solve2d_args.steps, "Number of time steps")->required();
  solve2d->add_option("--M", solve2d_args.cells, "Number of cells per direction")->required();
  solve2d
      ->add_option("--problem", solve2d_args.problem,
                   "example2: manufactured log-quartic benchmark on (-1,1)^2 x [1,2]; "
                   "custom: zero source with a smooth initial bump")
      ->check(CLI::IsMember({"example2", "custom"}))
      ->capture_default_str();
  solve2d
      ->add_option("--reference-cells", solve2d_args.reference_cells,
                   "Reference mesh for the example2 discrete source (0 = auto)")
      ->capture_default_str();
  solve2d->add_option("--format", solve2d_args.format, "Trajectory encoding")
      ->check(CLI::IsMember({"csv", "binary"}))
      ->capture_default_str();
  solve2d->add_option("--out", solve2d_args.out, "Output path")->capture_default_str();
  solve2d->callback([&solve2d_args] { run_solve2d(solve2d_args); });

  KernelsArgs kernels_args;
  CLI::App* kernels = app.add_subcommand(
      "kernels",
      "Dump discretization coefficients as CSV: a temporal weight row (i,c_i) given "
      "--scheme --alpha --N --k; the 1D stencil column (k,r_k) given --beta --M; the 2D "
      "coefficient table (j,k,a_jk) given --beta --M --oversample");
  CLI::Option* scheme_option =
      kernels->add_option("--scheme", kernels_args.scheme, "Temporal scheme")
          ->check(CLI::IsMember({"l2sigma", "l12"}));
  kernels->add_option("--alpha", kernels_args.alpha, "Temporal derivative order in (0,1)");
  kernels->add_option("--atilde", kernels_args.origin, "Left end of the time window")
      ->capture_default_str();
  kernels->add_option("--T", kernels_args.horizon, "Right end of the time window")
      ->capture_default_str();
  kernels->add_option("--N", kernels_args.steps, "Number of time steps");
  kernels->add_option("--k", kernels_args.row, "Weight row index");
  kernels->add_option("--beta", kernels_args.beta, "Spatial derivative order in (1,2)");
  CLI::Option* cells_option =
      kernels->add_option("--M", kernels_args.cells, "Largest displacement index to dump");
  CLI::Option* oversample_option = kernels->add_option(
      "--oversample", kernels_args.oversample,
      "Sampling density for the 2D coefficient quadrature (0 = auto); selects the a_jk dump");
  kernels->add_option("--out", kernels_args.out, "Output CSV path (default: stdout)");
  kernels->callback([&kernels_args, scheme_option, cells_option, oversample_option] {
    const bool temporal = scheme_option->count() > 0;
    const bool spatial = cells_option->count() > 0;
    if (!temporal && !spatial)
      throw CLI::ValidationError("kernels",
                                 "nothing to dump: give --scheme --alpha --N --k for a temporal "
                                 "row, or --beta --M for spatial coefficients");
    run_kernels(kernels_args, temporal, oversample_option->count() > 0);
  });

  ConvergeArgs converge_args;
  CLI::App* converge = app.add_subcommand(
      "converge", "Run a convergence ladder and report errors and observed orders");
  converge->add_option("--spec", converge_args.spec_path,
                       "Study configuration file (INI keys match these flags)");
  converge
      ->add_option("--mode", converge_args.mode,
                   "Which parameter the ladder refines, and the benchmark dimension")
      ->check(CLI::IsMember({"spatial-1d", "temporal-1d", "spatial-2d", "temporal-2d"}));
  converge->add_option("--scheme", converge_args.scheme, "Temporal scheme")
      ->check(CLI::IsMember({"l2sigma", "l12"}))
      ->capture_default_str();
  converge->add_option("--alpha", converge_args.alpha, "Temporal derivative order in (0,1)");
  converge->add_option("--beta", converge_args.beta, "Spatial derivative order in (1,2)");
  converge->add_option("--cells", converge_args.cells,
                       "Fixed spatial cell count (temporal modes)");
  converge->add_option("--steps", converge_args.steps, "Fixed step count (spatial modes)");
  converge->add_option("--ladder", converge_args.ladder,
                       "Cell counts (spatial modes) or step counts (temporal modes), one per rung");
  converge->add_option("--method", converge_args.method, "Per-step linear solver (1D modes)")
      ->check(CLI::IsMember({"auto", "toeplitz", "cg", "dense"}))
      ->capture_default_str();
  converge->add_option("--format", converge_args.format, "Report encoding")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();
  converge->add_option("--out", converge_args.out, "Output path (default: stdout)");
  converge->callback([&converge_args, converge] {
    if (!converge_args.spec_path.empty()) apply_study_config(converge, converge_args.spec_path);
    for (const char* name : {"--mode", "--alpha", "--beta", "--ladder"})
      require_from_cli_or_config(converge, name);
    run_converge(converge_args);
  });

  int row_samples = 200;
  int field_samples = 50;
  unsigned seed = 20260822u;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run every randomized property suite; exit code = number of failing suites");
  selftest->add_option("--row-samples", row_samples, "Random weight rows per temporal suite")
      ->capture_default_str();
  selftest->add_option("--field-samples", field_samples, "Random fields per quadratic-form suite")
      ->capture_default_str();
  selftest->add_option("--seed", seed, "Base seed for the suite generators")
      ->capture_default_str();
  selftest->callback(
      [&] { exit_code = run_selftest(row_samples, field_samples, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    return app.exit(error);
  } catch (const std::exception& error) {
    std::cerr << "ultraslow-fde: " << error.what() << '\n';
    return 1;
  }
  return exit_code;
}
