#include "abslcp_cli/cli.hpp"

#include "abslcp/errors.hpp"
#include "abslcp/fixed_point.hpp"
#include "abslcp/hybrid_solver.hpp"
#include "abslcp/oracle.hpp"
#include "abslcp_cli/problem_file.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <ostream>
#include <random>

namespace abslcp::cli {

namespace {

std::string fmt(double v, OutputFormat format) {
  char buf[64];
  if (format == OutputFormat::CsvFull) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.7f", v);
  }
  return buf;
}

std::string fmt_sci(double v, OutputFormat format) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format == OutputFormat::CsvFull ? "%.17g" : "%.7e", v);
  return buf;
}

std::string join_z(const Vector& z, OutputFormat format) {
  std::string s;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i) s += ", ";
    s += fmt(z[i], format);
  }
  return s;
}

struct Options {
  std::string method = "hybrid";
  std::string input;
  std::string x0;
  std::string format = "table";
  SolverConfig config;
  double agree_tol = 1e-6;
  int n = 4;
  unsigned long long seed = 1;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "csv-full") return OutputFormat::CsvFull;
  return OutputFormat::Table;
}

Vector start_point(const ProblemFile& file, const Options& opts) {
  if (!opts.x0.empty()) {
    Vector x0 = parse_vector_list(opts.x0);
    if (x0.size() != file.n) {
      throw ParseError("--x0 has " + std::to_string(x0.size()) + " entries, problem has n = " +
                       std::to_string(file.n));
    }
    return x0;
  }
  if (file.x0) return *file.x0;
  return Vector::Zero(file.n);
}

SolveReport run_method(const std::string& method, const LcpProblem& problem, const Vector& x0,
                       const SolverConfig& config) {
  if (method == "fixed-point") return fixed_point::solve(problem, x0, config);
  return hybrid::solve(problem, x0, config);
}

int exit_code(const SolveReport& report) {
  return report.status == SolveStatus::Converged ? kExitConverged : kExitNotConverged;
}

void add_solver_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--input", opts.input, "Problem file (JSON)")->required();
  cmd->add_option("--x0", opts.x0, "Starting point \"v1,...,vn\" (overrides the file)");
  cmd->add_option("--p", opts.config.p, "Smoothing parameter")->capture_default_str();
  cmd->add_option("--eps", opts.config.eps, "Tolerance on ||F(x)||_inf")->capture_default_str();
  cmd->add_option("--kstar", opts.config.kstar, "Steepest-descent restart period")
      ->capture_default_str();
  cmd->add_option("--rho", opts.config.rho, "Sufficient-decrease constant")->capture_default_str();
  cmd->add_option("--sigma", opts.config.sigma, "Curvature constant")->capture_default_str();
  cmd->add_option("--max-iters", opts.config.max_iters, "Iteration cap")->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "csv-full"}))
      ->capture_default_str();
}

}  // namespace

void write_trace(std::ostream& out, const SolveReport& report, OutputFormat format) {
  if (report.records.empty()) return;
  const Eigen::Index n = report.records.front().z.size();
  if (format == OutputFormat::Table) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6s", "k");
    out << buf;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof buf, " %12s", ("z" + std::to_string(i + 1)).c_str());
      out << buf;
    }
    std::snprintf(buf, sizeof buf, " %15s %15s", "merit", "res_inf");
    out << buf << '\n';
    for (const IterationRecord& r : report.records) {
      std::snprintf(buf, sizeof buf, "%6d", r.k);
      out << buf;
      for (Eigen::Index i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, " %12s", fmt(r.z[i], format).c_str());
        out << buf;
      }
      std::snprintf(buf, sizeof buf, " %15s %15s", fmt_sci(r.merit, format).c_str(),
                    fmt_sci(r.residual_F_inf, format).c_str());
      out << buf << '\n';
    }
    return;
  }
  out << 'k';
  for (Eigen::Index i = 0; i < n; ++i) out << ",z" << (i + 1);
  out << ",merit,res_inf\n";
  for (const IterationRecord& r : report.records) {
    out << r.k;
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << fmt(r.z[i], format);
    out << ',' << fmt_sci(r.merit, format) << ',' << fmt_sci(r.residual_F_inf, format) << '\n';
  }
}

void write_summary(std::ostream& out, const SolveReport& report, OutputFormat format) {
  const char* lead = format == OutputFormat::Table ? "" : "# ";
  const ResidualMetrics& m = report.final_residuals;
  out << lead << "status: " << to_string(report.status) << '\n';
  out << lead << "iterations: " << report.iterations() << '\n';
  out << lead << "z: (" << join_z(report.final_record().z, format) << ")\n";
  out << lead << "gap: " << fmt_sci(m.gap, format) << "  min_z: " << fmt_sci(m.min_z, format)
      << "  min_w: " << fmt_sci(m.min_w, format)
      << "  natural_residual: " << fmt_sci(m.natural_residual, format) << '\n';
  if (report.contraction_estimate) {
    out << lead << "contraction estimate ||D||_2: " << fmt(*report.contraction_estimate, format)
        << (report.non_contractive ? "  (warning: not a contraction)" : "") << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear complementarity solver via the absolute-value reformulation", "abslcp"};
  app.require_subcommand(1);

  Options opts;

  CLI::App* solve_cmd = app.add_subcommand("solve", "Run one solver and print its trace");
  solve_cmd->add_option("--method", opts.method, "Solver")
      ->check(CLI::IsMember({"fixed-point", "hybrid"}))
      ->capture_default_str();
  add_solver_flags(solve_cmd, opts);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run both solvers from the same start and compare");
  add_solver_flags(compare_cmd, opts);
  compare_cmd->add_option("--agree-tol", opts.agree_tol, "Agreement tolerance on z (inf-norm)")
      ->capture_default_str();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Enumerate all solutions (n <= 20)");
  oracle_cmd->add_option("--input", opts.input, "Problem file (JSON)")->required();
  oracle_cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "csv-full"}))
      ->capture_default_str();

  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Emit a random problem with M = A'A + I (test tooling)");
  gen_cmd->add_option("--n", opts.n, "Dimension")->check(CLI::Range(1, 1000))->capture_default_str();
  gen_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitConverged;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const OutputFormat format = parse_format(opts.format);
  try {
    if (*gen_cmd) {
      std::mt19937_64 rng(opts.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      Matrix A(opts.n, opts.n);
      for (double& a : A.reshaped()) a = normal(rng);
      ProblemFile file;
      file.n = opts.n;
      file.M = A.transpose() * A + Matrix::Identity(opts.n, opts.n);
      file.q.resize(opts.n);
      for (double& v : file.q) v = 3.0 * normal(rng);
      file.name = "spd-n" + std::to_string(opts.n) + "-seed" + std::to_string(opts.seed);
      out << to_json(file) << '\n';
      return kExitConverged;
    }

    const ProblemFile file = load_problem(opts.input);
    const LcpProblem problem = file.problem();

    if (*oracle_cmd) {
      const auto solutions = oracle::enumerate_solutions(problem);
      for (const auto& s : solutions) {
        out << "z = (" << join_z(s.z, format) << ")\n";
      }
      if (solutions.empty()) {
        out << "no solution\n";
        return kExitNotConverged;
      }
      return kExitConverged;
    }

    opts.config.validate();
    const Vector x0 = start_point(file, opts);

    if (*solve_cmd) {
      const SolveReport report = run_method(opts.method, problem, x0, opts.config);
      write_trace(out, report, format);
      write_summary(out, report, format);
      return exit_code(report);
    }

    // compare
    const SolveReport fp = fixed_point::solve(problem, x0, opts.config);
    const SolveReport hy = hybrid::solve(problem, x0, opts.config);
    const char* lead = format == OutputFormat::Table ? "" : "# ";
    out << lead << "== fixed-point ==\n";
    write_trace(out, fp, format);
    write_summary(out, fp, format);
    out << lead << "== hybrid ==\n";
    write_trace(out, hy, format);
    write_summary(out, hy, format);
    const double diff = (fp.final_record().z - hy.final_record().z).cwiseAbs().maxCoeff();
    const bool agree = diff <= opts.agree_tol;
    out << lead << "verdict: " << (agree ? "agree" : "disagree") << " (max |dz| = "
        << fmt_sci(diff, OutputFormat::Table) << ", tol = " << fmt_sci(opts.agree_tol, OutputFormat::Table)
        << ")\n";
    const bool both = fp.status == SolveStatus::Converged && hy.status == SolveStatus::Converged;
    return both && agree ? kExitConverged : kExitNotConverged;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  }
}

}  // namespace abslcp::cli
