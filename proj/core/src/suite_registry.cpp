#include "gmred/examples/suite.hpp"

namespace gmred {

const Chart& ExampleSuite::full_chart() const {
  if (pair) return pair->system.chart;
  if (lie_poisson) return lie_poisson->chart;
  throw UsageError("suite '" + name + "' has no full system chart");
}

VectorField ExampleSuite::full_field() const {
  if (total_field_closed) return *total_field_closed;
  if (pair) return symplectic_hvf(pair->system);
  if (lie_poisson) return poisson_hvf(*lie_poisson);
  throw UsageError("suite '" + name + "' has no full system field");
}

JacobiSystem ExampleSuite::reduced_system(char pipeline) const {
  if (pair && k_quotient_a && k_quotient_b) {
    const bool use_b = pipeline == 'B' || pipeline == 'b';
    if (use_b) return pipeline_B(*pair, *k_quotient_b).final_system;
    return pipeline_A(*pair, *k_quotient_a).final_system;
  }
  // Without a symplectic total chart the orderings coincide; default_k0
  // lives on the primary reduced chart, so the pipeline flag is ignored.
  const int idx = reduced_a_index >= 0 ? reduced_a_index : reduced_b_index;
  if (idx >= 0 && idx < static_cast<int>(jacobi_charts.size()))
    return jacobi_charts[idx].system;
  throw UsageError("suite '" + name + "' has no reduced system");
}

ReconstructedTrajectory run_preset(const ReconstructionPreset& preset,
                                   const Point& x0, double t0, double t1,
                                   double dt) {
  ReconstructionProblem rp{preset.bundle, preset.full_field,
                           preset.reduced_field, x0, t0, t1, dt};
  switch (preset.alpha) {
    case ReconstructionPreset::Alpha::BracketIntegrand:
      return reconstruct_symplectic(rp, preset.integrand);
    case ReconstructionPreset::Alpha::ReebDrift:
      return reconstruct_via_reeb(rp, preset.drift, preset.reduced_h);
    case ReconstructionPreset::Alpha::EDrift:
      return reconstruct_poisson(rp, preset.drift, preset.reduced_h);
  }
  throw UsageError("unknown reconstruction preset mode");
}

ExampleSuite build_suite(const std::string& name) {
  if (name == "ho") return build_ho();
  if (name == "linear") {
    ScalarField y1([](const auto& q) { return q[0]; });
    return build_linear_ctq(2, 2, {y1, constant_field(0.0)}, 1);
  }
  if (name == "so3") return build_so3();
  throw UsageError("unknown suite '" + name +
                   "' (available: ho, linear, so3)");
}

std::vector<std::string> suite_names() { return {"ho", "linear", "so3"}; }

}  // namespace gmred
