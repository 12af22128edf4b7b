// Command-line front end: simulate / reduce / reconstruct / verify on the
// built-in example suites, writing CSV tables and residual reports.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 usage, domain, or I/O error.

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmred/examples/suite.hpp"
#include "gmred/harness/csv_io.hpp"
#include "gmred/harness/report.hpp"
#include "gmred/harness/verify.hpp"
#include "gmred/integrate/rk4.hpp"
#include "gmred/numcore/errors.hpp"
#include "gmred/reconstruction/reconstruct.hpp"
#include "gmred/structures/jacobi.hpp"

namespace {

constexpr int kReduceGridPerAxis = 8;

struct Options {
  std::string suite;
  std::string out;
  double dt = std::nan("");
  double t0 = std::nan("");
  double t1 = std::nan("");
  std::uint64_t seed = gmred::kDefaultSeed;
  std::vector<std::string> tol;
  bool reduced = false;
  std::string pipeline = "A";
};

std::map<std::string, double> parse_tols(const std::vector<std::string>& kv) {
  std::map<std::string, double> m;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw gmred::UsageError("--tol expects <name>=<value>, got '" + s + "'");
    try {
      size_t used = 0;
      const std::string v = s.substr(eq + 1);
      m[s.substr(0, eq)] = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw gmred::UsageError("--tol value is not a number in '" + s + "'");
    }
  }
  return m;
}

struct TimeGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  double dt = 0.0;
};

TimeGrid resolve_grid(const Options& o, const gmred::ExampleSuite& suite) {
  TimeGrid g;
  g.t0 = std::isnan(o.t0) ? suite.default_t0 : o.t0;
  g.t1 = std::isnan(o.t1) ? suite.default_t1 : o.t1;
  g.dt = std::isnan(o.dt) ? suite.default_dt : o.dt;
  if (!(g.dt > 0.0)) throw gmred::UsageError("--dt must be positive");
  if (g.t1 < g.t0) throw gmred::UsageError("--t1 must not precede --t0");
  return g;
}

/// Run `writer` against stdout or the --out file (binary mode keeps the
/// '\n' line endings byte-stable).
int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    return std::cout ? 0 : 2;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "gmred: cannot open '" << path << "' for writing\n";
    return 2;
  }
  writer(f);
  f.flush();
  if (!f) {
    std::cerr << "gmred: error while writing '" << path << "'\n";
    return 2;
  }
  return 0;
}

int run_simulate(const Options& o) {
  gmred::ExampleSuite suite = gmred::build_suite(o.suite);
  const TimeGrid g = resolve_grid(o, suite);
  if (o.reduced) {
    gmred::JacobiSystem sys = suite.reduced_system(o.pipeline[0]);
    gmred::Trajectory tr = gmred::rk4_flow(
        gmred::jacobi_hvf(sys), sys.chart, suite.default_k0, g.t0, g.t1, g.dt);
    return with_output(o.out, [&](std::ostream& os) {
      gmred::write_trajectory_csv(os, sys.chart, tr);
    });
  }
  gmred::Trajectory tr =
      gmred::rk4_flow(suite.full_field(), suite.full_chart(),
                      suite.default_x0, g.t0, g.t1, g.dt);
  return with_output(o.out, [&](std::ostream& os) {
    gmred::write_trajectory_csv(os, suite.full_chart(), tr);
  });
}

int run_reduce(const Options& o) {
  gmred::ExampleSuite suite = gmred::build_suite(o.suite);
  gmred::JacobiSystem sys = suite.reduced_system(o.pipeline[0]);
  gmred::VectorField field = gmred::jacobi_hvf(sys);
  return with_output(o.out, [&](std::ostream& os) {
    gmred::write_jacobi_table_csv(os, sys, field, kReduceGridPerAxis);
  });
}

int run_reconstruct(const Options& o) {
  gmred::ExampleSuite suite = gmred::build_suite(o.suite);
  if (suite.reconstructions.empty())
    throw gmred::UsageError("suite '" + o.suite +
                            "' has no reconstruction presets");
  const TimeGrid g = resolve_grid(o, suite);
  const gmred::ReconstructionPreset& pre = suite.reconstructions.front();
  gmred::ReconstructedTrajectory rt =
      gmred::run_preset(pre, suite.default_x0, g.t0, g.t1, g.dt);
  gmred::Trajectory direct =
      gmred::rk4_flow(pre.full_field, pre.bundle.quotient.total,
                      suite.default_x0, g.t0, g.t1, g.dt);
  return with_output(o.out, [&](std::ostream& os) {
    gmred::write_reconstruction_csv(os, pre.bundle.quotient.total,
                                    pre.bundle.quotient.base, rt, direct);
  });
}

int run_verify(const Options& o) {
  gmred::ExampleSuite suite = gmred::build_suite(o.suite);
  gmred::VerifyOptions vo;
  vo.seed = o.seed;
  vo.tol = parse_tols(o.tol);
  std::vector<gmred::CheckReport> reports = gmred::verify_suite(suite, vo);
  std::cout << gmred::format_report_table(reports);
  if (!o.out.empty()) {
    const int rc = with_output(o.out, [&](std::ostream& os) {
      gmred::write_report_csv(os, reports);
    });
    if (rc != 0) return rc;
  }
  return gmred::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bracket-geometry toolkit: simulate, reduce, reconstruct, and verify "
      "the built-in example suites"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--suite", o.suite, "example suite: ho, linear, so3")
        ->required();
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--dt", o.dt, "integration step (suite default if unset)");
    cmd->add_option("--t0", o.t0, "start time (suite default if unset)");
    cmd->add_option("--t1", o.t1, "end time (suite default if unset)");
    cmd->add_option("--seed", o.seed, "sampling seed (verify only)");
    cmd->add_option("--tol", o.tol,
                    "tolerance override <name>=<value> (verify only)");
    cmd->add_flag("--reduced", o.reduced,
                  "integrate the reduced system (simulate only)");
    cmd->add_option("--pipeline", o.pipeline,
                    "reduction ordering for the reduced system")
        ->check(CLI::IsMember({"A", "B"}));
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "integrate the full (or reduced) dynamics and write CSV");
  CLI::App* reduce = app.add_subcommand(
      "reduce", "tabulate the reduced bracket components on a grid");
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct",
      "lift the reduced flow back to the total chart and compare with "
      "direct integration");
  CLI::App* verify = app.add_subcommand(
      "verify", "run the full residual check battery for a suite");
  for (CLI::App* cmd : {simulate, reduce, reconstruct, verify})
    add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(o);
    if (reduce->parsed()) return run_reduce(o);
    if (reconstruct->parsed()) return run_reconstruct(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const gmred::Error& e) {
    std::cerr << "gmred: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gmred: internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
