// Acceptance gate for the reduction toolkit.  Each criterion prints exactly
// one PASS/FAIL line with the measured deviation and its tolerance; the
// process exit code is the number of failed criteria.  Tolerances are fixed
// here on purpose -- do not loosen them to make a line turn green.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gmred/config.hpp"
#include "gmred/examples/suite.hpp"
#include "gmred/harness/report.hpp"
#include "gmred/harness/testfns.hpp"
#include "gmred/harness/verify.hpp"
#include "gmred/integrate/rk4.hpp"
#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/rng.hpp"
#include "gmred/reconstruction/reconstruct.hpp"
#include "gmred/reduction/homogeneous.hpp"
#include "gmred/reduction/pipelines.hpp"
#include "gmred/reduction/scaling.hpp"
#include "gmred/reduction/standard.hpp"
#include "gmred/structures/contact.hpp"
#include "gmred/structures/jacobi.hpp"
#include "gmred/structures/kirillov.hpp"
#include "gmred/structures/poisson.hpp"
#include "gmred/structures/symplectic.hpp"

namespace {

using namespace gmred;

std::string g3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

/// Collects named (deviation, tolerance) parts of one criterion; the
/// criterion passes when every part is strictly below its tolerance.
struct Parts {
  bool pass = true;
  std::string detail;

  void add(const std::string& name, double dev, double tol) {
    if (!(dev < tol)) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += name + " " + g3(dev) + " vs " + g3(tol);
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

struct Gate {
  int failures = 0;

  void line(int num, const std::string& desc, bool pass,
            const std::string& detail) {
    if (!pass) ++failures;
    std::printf("%s criterion-%02d %s (%s)\n", pass ? "PASS" : "FAIL", num,
                desc.c_str(), detail.c_str());
    std::fflush(stdout);
  }
};

double max_abs_diff(const Point& a, const Point& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const Mat<double>& a, const Mat<double>& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Point sample_box(const std::vector<std::pair<double, double>>& box,
                 Sampler& rng) {
  Point y(box.size());
  for (size_t i = 0; i < box.size(); ++i)
    y[i] = rng.uniform(box[i].first, box[i].second);
  return y;
}

// ---------------------------------------------------------------------------
// 1. Derived contact structure on the oscillator scaling quotient: the
//    structural identities eta(R) = 1, i_R d(eta) = 0 hold pointwise and the
//    generically solved Reeb field matches the directly coded one.
void criterion1(Gate& gate) {
  ExampleSuite suite = build_ho();
  ContactFormSystem derived =
      reduce_symplectic_by_scaling(suite.pair->system, suite.pair->scaling);
  VectorField reeb = reeb_field(derived);
  Sampler rng(kDefaultSeed);
  double axioms = 0.0, closed = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point z = rng.sample(derived.chart);
    axioms = std::max(axioms, contact_axiom_residual(derived, z));
    closed = std::max(closed, max_abs_diff(reeb(z), (*suite.reeb_closed)(z)));
  }
  Parts p;
  p.add("structural identities", axioms, 1e-9);
  p.add("closed-form Reeb match", closed, 1e-8);
  gate.line(1, "derived contact data and its Reeb field", p.pass, p.detail);
}

// ---------------------------------------------------------------------------
// 2. The contact Hamiltonian field of the descended Hamiltonian satisfies
//    its defining linear system, matches the directly coded chart field, and
//    pushes forward to the coded final reduced field.
void criterion2(Gate& gate) {
  ExampleSuite suite = build_ho();
  ContactFormSystem derived =
      reduce_symplectic_by_scaling(suite.pair->system, suite.pair->scaling);
  VectorField field = contact_hvf(derived);
  MatrixField jp = jacobian(suite.k_quotient_b->project);
  Sampler rng(kDefaultSeed);
  double defining = 0.0, closed = 0.0, pushed = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point z = rng.sample(derived.chart);
    defining = std::max(
        defining, contact_solve_residual(derived, derived.hamiltonian, z));
    Point xz = field(z);
    closed =
        std::max(closed, max_abs_diff(xz, (*suite.contact_field_closed)(z)));
    Point down = jp(z) * xz;
    Point kz = suite.k_quotient_b->project(z);
    pushed = std::max(pushed,
                      max_abs_diff(down, (*suite.reduced_field_closed)(kz)));
  }
  Parts p;
  p.add("defining conditions", defining, 1e-9);
  p.add("chart field match", closed, 1e-8);
  p.add("pushforward match", pushed, 1e-8);
  gate.line(2, "contact Hamiltonian field of the descended energy", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 3. Projection commutation: for random degree-one homogeneous Hamiltonians
//    on each scaling presentation, Tp(X_H) = X_h o p with h the descended
//    Hamiltonian of the generic scaling reduction.
void criterion3(Gate& gate) {
  double worst = 0.0;
  int bundles = 0;
  for (const char* name : {"ho", "so3"}) {
    ExampleSuite suite = build_suite(name);
    Sampler rng(kDefaultSeed);
    for (const auto& pres : suite.poisson_presentations) {
      ++bundles;
      MatrixField jp = jacobian(pres.bundle.quotient.project);
      for (int trial = 0; trial < 5; ++trial) {
        ScalarField base_fn =
            random_test_function(pres.bundle.quotient.base, rng);
        ScalarField hom = section_to_hom(base_fn, pres.bundle);
        PoissonSystem up{pres.system.chart, pres.system.pi, hom};
        JacobiSystem down = reduce_poisson_by_scaling(up, pres.bundle);
        VectorField x_up = poisson_hvf(up);
        VectorField x_down = jacobi_hvf(down);
        for (int i = 0; i < 100; ++i) {
          Point x = rng.sample(pres.system.chart);
          Point lhs = jp(x) * x_up(x);
          Point rhs = x_down(pres.bundle.quotient.project(x));
          worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
      }
    }
  }
  Parts p;
  p.add("commutation", worst, 1e-8);
  p.note(std::to_string(bundles) + " bundles x 5 random Hamiltonians");
  gate.line(3, "scaling reduction commutes with the projection", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 4. The Hamiltonian-field map is an anti-homomorphism on every first-order
//    bracket chart: [X_{h1}, X_{h2}] + X_{{h1,h2}} = 0.
void criterion4(Gate& gate) {
  double worst = 0.0;
  for (const std::string& name : suite_names()) {
    ExampleSuite suite = build_suite(name);
    Sampler rng(kDefaultSeed);
    for (const auto& nj : suite.jacobi_charts) {
      ScalarField h1 = random_test_function(nj.system.chart, rng);
      ScalarField h2 = random_test_function(nj.system.chart, rng);
      VectorField x1 = jacobi_hvf(nj.system, h1);
      VectorField x2 = jacobi_hvf(nj.system, h2);
      VectorField xb = jacobi_hvf(nj.system, jacobi_bracket(nj.system, h1, h2));
      VectorField lb = lie_bracket(x1, x2);
      for (int i = 0; i < 100; ++i) {
        Point x = rng.sample(nj.system.chart);
        Point a = lb(x);
        Point b = xb(x);
        for (size_t c = 0; c < a.size(); ++c)
          worst = std::max(worst, std::abs(a[c] + b[c]));
      }
    }
  }
  Parts p;
  p.add("[X_h1,X_h2] + X_{h1,h2}", worst, 1e-7);
  gate.line(4, "bracket-to-field anti-homomorphism on every chart", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 5. Every generic construction reproduces its directly coded reference:
//    ordinary quotient, rescaled quotient, contact-induced bracket data,
//    presentation reductions, and both full pipelines.
void criterion5(Gate& gate) {
  double worst = 0.0;
  int comparisons = 0;
  auto compare_jacobi = [&](const JacobiSystem& gen, const JacobiSystem& ref,
                            Sampler& rng) {
    ++comparisons;
    for (int i = 0; i < 100; ++i) {
      Point x = rng.sample(ref.chart);
      worst = std::max(worst, max_abs_diff(gen.pi(x), ref.pi(x)));
      worst = std::max(worst, max_abs_diff(gen.e(x), ref.e(x)));
      worst = std::max(
          worst, std::abs(gen.hamiltonian(x) - ref.hamiltonian(x)));
    }
  };
  for (const char* name : {"ho", "linear"}) {
    ExampleSuite suite = build_suite(name);
    const CompatiblePair& cp = *suite.pair;
    Sampler rng(kDefaultSeed);
    if (suite.quotient_poisson_closed) {
      PoissonSystem gen =
          reduce_symplectic_by_standard(cp.system, cp.standard, cp.standard_q);
      const PoissonSystem& ref = *suite.quotient_poisson_closed;
      ++comparisons;
      for (int i = 0; i < 100; ++i) {
        Point y = rng.sample(ref.chart);
        worst = std::max(worst, max_abs_diff(gen.pi(y), ref.pi(y)));
        worst = std::max(
            worst, std::abs(gen.hamiltonian(y) - ref.hamiltonian(y)));
      }
    }
    if (suite.rescaled_quotient && suite.rescaled_poisson_closed) {
      PoissonSystem gen = reduce_symplectic_by_standard(
          cp.system, cp.standard, *suite.rescaled_quotient);
      const PoissonSystem& ref = *suite.rescaled_poisson_closed;
      ++comparisons;
      for (int i = 0; i < 100; ++i) {
        Point y = rng.sample(ref.chart);
        worst = std::max(worst, max_abs_diff(gen.pi(y), ref.pi(y)));
        worst = std::max(
            worst, std::abs(gen.hamiltonian(y) - ref.hamiltonian(y)));
      }
    }
    if (suite.contact_closed && suite.contact_jacobi_index >= 0) {
      JacobiSystem gen = jacobi_from_contact(*suite.contact_closed);
      compare_jacobi(gen, suite.jacobi_charts[suite.contact_jacobi_index].system,
                     rng);
    }
    for (const auto& pres : suite.poisson_presentations) {
      JacobiSystem gen = reduce_poisson_by_scaling(pres.system, pres.bundle);
      compare_jacobi(gen, suite.jacobi_charts[pres.reduces_to].system, rng);
    }
    PipelineResult ra = pipeline_A(cp, *suite.k_quotient_a);
    compare_jacobi(ra.final_system,
                   suite.jacobi_charts[suite.reduced_a_index].system, rng);
    PipelineResult rb = pipeline_B(cp, *suite.k_quotient_b);
    compare_jacobi(rb.final_system,
                   suite.jacobi_charts[suite.reduced_b_index].system, rng);
  }
  Parts p;
  p.add("generic vs coded", worst, 1e-8);
  p.note(std::to_string(comparisons) + " chart comparisons");
  gate.line(5, "generic constructions reproduce the coded references", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 6. The two reduction orderings agree: on the oscillator through the chart
//    map between the two final charts, and on the coalgebra through the
//    projective-chart transition (fields pushed forward, Hamiltonian
//    sections transported by the conformal factor).
void criterion6(Gate& gate) {
  double fields = 0.0, hams = 0.0;
  {
    ExampleSuite suite = build_ho();
    const CompatiblePair& cp = *suite.pair;
    PipelineResult ra = pipeline_A(cp, *suite.k_quotient_a);
    PipelineResult rb = pipeline_B(cp, *suite.k_quotient_b);
    CoordMap psi = equivalence_psi(cp, *suite.k_quotient_a, *suite.k_quotient_b);
    MatrixField jpsi = jacobian(psi);
    VectorField xa = jacobi_hvf(ra.final_system);
    VectorField xb = jacobi_hvf(rb.final_system);
    Sampler rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
      Point k = rng.sample(ra.final_system.chart);
      Point image = psi(k);
      fields = std::max(fields, max_abs_diff(jpsi(k) * xa(k), xb(image)));
      hams = std::max(hams, std::abs(ra.final_system.hamiltonian(k) -
                                     rb.final_system.hamiltonian(image)));
    }
  }
  {
    ExampleSuite suite = build_so3();
    const KirillovAtlas& atlas = *suite.atlas;
    std::vector<ScalarField> locals = suite.lie_section_locals({0.0, 0.0, 1.0});
    const AtlasTransition& tr = atlas.transition(0, 1);
    Sampler rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
      Point y = sample_box(tr.overlap_box, rng);
      fields = std::max(fields, symbol_overlap_residual(atlas, locals, 0, 1, y));
      hams = std::max(hams, section_transport_residual(atlas, locals, 0, 1, y));
    }
  }
  Parts p;
  p.add("field agreement", fields, 1e-8);
  p.add("Hamiltonian agreement", hams, 1e-8);
  gate.line(6, "both reduction orderings give the same final chart data",
            p.pass, p.detail);
}

// ---------------------------------------------------------------------------
// 7. Oscillator reconstruction round trip from the pinned start (1,0,1,0)
//    over [0,1] at dt = 1e-3, for both trivializations, plus an observed
//    convergence order >= 3.5 under step refinement.
void criterion7(Gate& gate) {
  ExampleSuite suite = build_ho();
  const Chart& total = suite.full_chart();
  auto deviation = [&](const ReconstructionPreset& preset, const Point& x0,
                       double t1, double dt) {
    ReconstructedTrajectory rt = run_preset(preset, x0, 0.0, t1, dt);
    Trajectory direct = rk4_flow(preset.full_field, total, x0, 0.0, t1, dt);
    return reconstruction_deviation(rt, direct, total);
  };
  const ReconstructionPreset& energy = suite.reconstructions[0];
  const ReconstructionPreset& radius = suite.reconstructions[1];
  const Point pinned{1.0, 0.0, 1.0, 0.0};

  double sup_energy = deviation(energy, pinned, 1.0, 1e-3);
  double sup_radius = deviation(radius, pinned, 1.0, 1e-3);
  const std::array<double, 4> steps{4e-3, 2e-3, 1e-3, 5e-4};
  std::array<double, 4> errs{};
  for (size_t i = 0; i < steps.size(); ++i)
    errs[i] = deviation(energy, pinned, 1.0, steps[i]);
  double order = std::log(errs[0] / errs[3]) / std::log(8.0);

  Parts p;
  p.add("energy preset sup", sup_energy, 1e-5);
  p.add("radius preset sup", sup_radius, 1e-5);
  bool order_ok = order >= 3.5;
  if (!order_ok) p.pass = false;
  p.note("observed order " + g3(order) + " vs >= 3.5");
  gate.line(7, "reconstruction round trip from the pinned radial start",
            p.pass, p.detail);
  if (!p.pass) {
    std::printf(
        "    note: this start generates a purely radial orbit; the "
        "configuration radius reaches the chart boundary near t = pi/4, both "
        "the direct and the reconstructed runs truncate there, and samples "
        "crowding the boundary dominate the deviation and destroy the "
        "convergence order.\n");
    double w_energy = deviation(energy, pinned, 0.7, 1e-3);
    double w_radius = deviation(radius, pinned, 0.7, 1e-3);
    double w_order = std::log(deviation(energy, pinned, 0.7, 4e-3) /
                              deviation(energy, pinned, 0.7, 5e-4)) /
                     std::log(8.0);
    std::printf(
        "    diagnostic: restricted to [0, 0.7] the same runs give sup %s "
        "(energy) and %s (radius), observed order %s.\n",
        g3(w_energy).c_str(), g3(w_radius).c_str(), g3(w_order).c_str());
    double h_energy = deviation(energy, suite.default_x0, 1.0, 1e-3);
    double h_radius = deviation(radius, suite.default_x0, 1.0, 1e-3);
    std::printf(
        "    diagnostic: from the interior start (1.2, 0.3, 0.8, 1.9) the "
        "full-span deviations are %s and %s.\n",
        g3(h_energy).c_str(), g3(h_radius).c_str());
    std::fflush(stdout);
  }
}

// ---------------------------------------------------------------------------
// 8. Coalgebra flow reconstruction from (0.3, 0.4, 1.2) over [0,1] at
//    dt = 1e-3, and conservation of the quadratic invariant along the
//    directly integrated flow.
void criterion8(Gate& gate) {
  ExampleSuite suite = build_so3();
  const ReconstructionPreset& preset = suite.reconstructions[0];
  const Chart& total = suite.full_chart();
  const Point x0{0.3, 0.4, 1.2};
  ReconstructedTrajectory rt = run_preset(preset, x0, 0.0, 1.0, 1e-3);
  Trajectory direct = rk4_flow(preset.full_field, total, x0, 0.0, 1.0, 1e-3);
  double sup = reconstruction_deviation(rt, direct, total);
  const ScalarField& cas = *suite.casimir;
  double c0 = cas(x0);
  double drift = 0.0;
  for (const Point& s : direct.states)
    drift = std::max(drift, std::abs(cas(s) - c0));
  Parts p;
  p.add("reconstruction sup", sup, 1e-5);
  p.add("invariant drift", drift, 1e-7);
  gate.line(8, "coalgebra reconstruction and invariant conservation", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 9. Jacobi identity of every first-order bracket chart, over random
//    function triples and sample points.
void criterion9(Gate& gate) {
  double worst = 0.0;
  int charts = 0;
  for (const std::string& name : suite_names()) {
    ExampleSuite suite = build_suite(name);
    Sampler rng(kDefaultSeed);
    for (const auto& nj : suite.jacobi_charts) {
      ++charts;
      for (int trial = 0; trial < 20; ++trial) {
        ScalarField f = random_test_function(nj.system.chart, rng);
        ScalarField g = random_test_function(nj.system.chart, rng);
        ScalarField h = random_test_function(nj.system.chart, rng);
        for (int i = 0; i < 50; ++i) {
          Point x = rng.sample(nj.system.chart);
          worst = std::max(worst,
                           jacobi_identity_residual(nj.system, f, g, h, x));
        }
      }
    }
    if (suite.lie_poisson) {
      ++charts;
      const PoissonSystem& sys = *suite.lie_poisson;
      for (int trial = 0; trial < 20; ++trial) {
        ScalarField f = random_test_function(sys.chart, rng);
        ScalarField g = random_test_function(sys.chart, rng);
        ScalarField h = random_test_function(sys.chart, rng);
        for (int i = 0; i < 50; ++i) {
          Point x = rng.sample(sys.chart);
          worst = std::max(worst, jacobi_identity_residual(sys, f, g, h, x));
        }
      }
    }
  }
  Parts p;
  p.add("identity residual", worst, 1e-8);
  p.note(std::to_string(charts) + " charts x 20 triples x 50 points");
  gate.line(9, "Jacobi identity on every bracket chart", p.pass, p.detail);
}

// ---------------------------------------------------------------------------
// 10. Atlas consistency on the coalgebra: transition cocycles, factor
//     cocycles, bracket transport across the overlap, and symbol fields
//     (generic solve vs coded chart expressions, plus overlap agreement).
void criterion10(Gate& gate) {
  ExampleSuite suite = build_so3();
  const KirillovAtlas& atlas = *suite.atlas;
  Sampler rng(kDefaultSeed);
  double glue = 0.0, symbol = 0.0;
  for (const AtlasTransition& tr : atlas.transitions) {
    ScalarField u = random_test_function(atlas.charts[tr.to].chart, rng);
    ScalarField v = random_test_function(atlas.charts[tr.to].chart, rng);
    for (int k = 0; k < 50; ++k) {
      Point y = sample_box(tr.overlap_box, rng);
      glue = std::max(glue, cocycle_residual(atlas, tr.from, tr.to, y));
      glue = std::max(glue, factor_cocycle_residual(atlas, tr.from, tr.to, y));
      glue = std::max(
          glue, bracket_transport_residual(atlas, tr.from, tr.to, u, v, y));
    }
  }
  std::vector<std::array<double, 3>> sections{{0.0, 0.0, 1.0}};
  sections.push_back(
      {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  for (const auto& xi : sections) {
    std::vector<ScalarField> locals = suite.lie_section_locals(xi);
    for (int c = 0; c < 2; ++c) {
      VectorField generic = kirillov_symbol(atlas, locals, c);
      VectorField coded = suite.lie_symbol_closed(c, xi);
      for (int k = 0; k < 50; ++k) {
        Point y = rng.sample(atlas.charts[c].chart);
        symbol = std::max(symbol, max_abs_diff(generic(y), coded(y)));
      }
    }
    const AtlasTransition& tr = atlas.transition(0, 1);
    for (int k = 0; k < 50; ++k) {
      Point y = sample_box(tr.overlap_box, rng);
      symbol = std::max(symbol, symbol_overlap_residual(atlas, locals, 0, 1, y));
    }
  }
  Parts p;
  p.add("gluing", glue, 1e-6);
  p.add("symbols", symbol, 1e-8);
  gate.line(10, "projective atlas gluing and symbol consistency", p.pass,
            p.detail);
}

// ---------------------------------------------------------------------------
// 11. Determinism: running the verification battery twice with the same
//     seed yields field-for-field identical reports and byte-identical CSV.
void criterion11(Gate& gate) {
  VerifyOptions opt;  // default seed
  ExampleSuite suite = build_so3();
  std::vector<CheckReport> first = verify_suite(suite, opt);
  std::vector<CheckReport> second = verify_suite(suite, opt);
  bool same = first.size() == second.size();
  if (same) {
    for (size_t i = 0; i < first.size(); ++i) {
      const CheckReport& a = first[i];
      const CheckReport& b = second[i];
      same = same && a.check == b.check && a.suite == b.suite &&
             a.samples == b.samples && a.max_deviation == b.max_deviation &&
             a.tolerance == b.tolerance && a.pass == b.pass &&
             a.worst_point == b.worst_point;
    }
  }
  std::ostringstream ca, cb;
  write_report_csv(ca, first);
  write_report_csv(cb, second);
  bool bytes = ca.str() == cb.str();
  Parts p;
  if (!(same && bytes)) p.pass = false;
  p.note(same ? "reports identical field for field" : "reports diverged");
  p.note(bytes ? "CSV byte-identical" : "CSV diverged");
  p.note(std::to_string(first.size()) + " checks");
  gate.line(11, "verification battery is deterministic under a fixed seed",
            p.pass, p.detail);
}

}  // namespace

int main() {
  Gate gate;
  const std::vector<std::pair<int, std::function<void(Gate&)>>> criteria{
      {1, criterion1},  {2, criterion2}, {3, criterion3},  {4, criterion4},
      {5, criterion5},  {6, criterion6}, {7, criterion7},  {8, criterion8},
      {9, criterion9},  {10, criterion10}, {11, criterion11},
  };
  for (const auto& [num, fn] : criteria) {
    try {
      fn(gate);
    } catch (const std::exception& e) {
      gate.line(num, "criterion execution failed", false, e.what());
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - gate.failures,
              criteria.size());
  return gate.failures;
}
