#include "gmred/reconstruction/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "gmred/integrate/quadrature.hpp"
#include "gmred/numcore/calculus.hpp"

namespace gmred {

double flat_connection(const ScalingBundle& b, const Point& x,
                       const Point& v) {
  auto delta = generator(b.action);
  auto df = differential(b.scale);
  auto grad = df(x);
  auto d = delta(x);
  double delta_f = 0.0;
  for (size_t i = 0; i < grad.size(); ++i) delta_f += grad[i] * d[i];
  if (!(std::abs(delta_f) > 0.0))
    throw DegeneracyError("generator is tangent to the scale level set");
  double a = 0.0;
  for (size_t i = 0; i < grad.size(); ++i) a += grad[i] * v[i];
  return a;
}

Trajectory horizontal_lift(const ScalingBundle& b, const Trajectory& gamma,
                           double s0) {
  if (!(s0 != 0.0)) throw UsageError("horizontal lift needs s0 != 0");
  Trajectory phi;
  phi.times = gamma.times;
  phi.truncated = gamma.truncated;
  phi.truncation_reason = gamma.truncation_reason;
  phi.states.reserve(gamma.states.size());
  const auto& sec = b.quotient.section;
  for (const auto& y : gamma.states) {
    auto x = sec(y);
    double fx = b.scale(x);
    if (!(fx > 0.0))
      throw DomainError("scale function left the positive component");
    auto lifted = b.action.apply(s0 / fx, x);
    b.quotient.total.wrap(lifted);
    phi.states.push_back(std::move(lifted));
  }
  return phi;
}

namespace {

ReconstructedTrajectory assemble(const ReconstructionProblem& rp,
                                 Trajectory gamma,
                                 std::vector<double> alpha) {
  ReconstructedTrajectory rt;
  double s0 = rp.bundle.scale(rp.x0);
  rt.gamma = std::move(gamma);
  rt.phi = horizontal_lift(rp.bundle, rt.gamma, s0);
  rt.times = rt.gamma.times;
  rt.alpha = std::move(alpha);
  rt.total.times = rt.gamma.times;
  rt.total.truncated = rt.gamma.truncated;
  rt.total.truncation_reason = rt.gamma.truncation_reason;
  rt.total.states.reserve(rt.phi.states.size());
  for (size_t k = 0; k < rt.phi.states.size(); ++k) {
    auto state = rp.bundle.action.apply(std::exp(rt.alpha[k]),
                                        rt.phi.states[k]);
    rp.bundle.quotient.total.wrap(state);
    rt.total.states.push_back(std::move(state));
  }
  return rt;
}

Trajectory integrate_base(const ReconstructionProblem& rp) {
  if (!rp.bundle.quotient.total.in_domain(rp.x0))
    throw DomainError("reconstruction start lies outside the total chart");
  if (!(rp.bundle.scale(rp.x0) > 0.0))
    throw DomainError("scale function must be positive at the start point");
  auto y0 = rp.bundle.quotient.project(rp.x0);
  return rk4_flow(rp.reduced_field, rp.bundle.quotient.base, y0, rp.t0,
                  rp.t1, rp.dt);
}

double grid_step(const ReconstructionProblem& rp) {
  int n = step_count(rp.t0, rp.t1, rp.dt);
  return n == 0 ? 0.0 : (rp.t1 - rp.t0) / n;
}

}  // namespace

ReconstructedTrajectory reconstruct_symplectic(const ReconstructionProblem& rp,
                                               const ScalarField& integrand) {
  auto gamma = integrate_base(rp);
  double s0 = rp.bundle.scale(rp.x0);
  auto phi = horizontal_lift(rp.bundle, gamma, s0);
  std::vector<double> values(phi.states.size());
  for (size_t k = 0; k < phi.states.size(); ++k)
    values[k] = integrand(phi.states[k]) / s0;
  auto alpha = cumulative_simpson(values, grid_step(rp));
  return assemble(rp, std::move(gamma), std::move(alpha));
}

ReconstructedTrajectory reconstruct_via_reeb(const ReconstructionProblem& rp,
                                             const VectorField& reeb,
                                             const ScalarField& h) {
  auto gamma = integrate_base(rp);
  auto drift = derive_along(reeb, h);
  std::vector<double> values(gamma.states.size());
  for (size_t k = 0; k < gamma.states.size(); ++k)
    values[k] = -drift(gamma.states[k]);
  auto alpha = cumulative_simpson(values, grid_step(rp));
  return assemble(rp, std::move(gamma), std::move(alpha));
}

ReconstructedTrajectory reconstruct_poisson(const ReconstructionProblem& rp,
                                            const VectorField& e_field,
                                            const ScalarField& h) {
  auto gamma = integrate_base(rp);
  auto drift = derive_along(e_field, h);
  std::vector<double> values(gamma.states.size());
  for (size_t k = 0; k < gamma.states.size(); ++k)
    values[k] = drift(gamma.states[k]);
  auto alpha = cumulative_simpson(values, grid_step(rp));
  return assemble(rp, std::move(gamma), std::move(alpha));
}

double level_set_residual(const ReconstructedTrajectory& rt,
                          const ScalingBundle& b) {
  if (rt.phi.states.empty()) return 0.0;
  double s0 = b.scale(rt.phi.states.front());
  double worst = 0.0;
  for (const auto& x : rt.phi.states)
    worst = std::max(worst, std::abs(b.scale(x) - s0));
  return worst;
}

double projection_residual(const ReconstructedTrajectory& rt,
                           const ScalingBundle& b) {
  double worst = 0.0;
  for (size_t k = 0; k < rt.total.states.size(); ++k) {
    auto back = b.quotient.project(rt.total.states[k]);
    worst = std::max(worst,
                     b.quotient.base.distance(back, rt.gamma.states[k]));
  }
  return worst;
}

double reconstruction_deviation(const ReconstructedTrajectory& rt,
                                const Trajectory& direct,
                                const Chart& total_chart) {
  size_t m = std::min(rt.total.states.size(), direct.states.size());
  double worst = 0.0;
  for (size_t k = 0; k < m; ++k)
    worst = std::max(worst,
                     total_chart.distance(rt.total.states[k],
                                          direct.states[k]));
  return worst;
}

}  // namespace gmred
