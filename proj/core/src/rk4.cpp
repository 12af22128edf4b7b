#include "gmred/integrate/rk4.hpp"

#include <cmath>

#include "gmred/numcore/errors.hpp"

namespace gmred {

int step_count(double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw UsageError("step size must be positive");
  if (t1 < t0) throw UsageError("time span must have t1 >= t0");
  double span = t1 - t0;
  if (span == 0.0) return 0;
  return std::max(1, static_cast<int>(std::lround(span / dt)));
}

Trajectory rk4_flow(const VectorField& field, const Chart& chart,
                    const Point& x0, double t0, double t1, double dt) {
  Trajectory traj;
  if (!chart.in_domain(x0))
    throw DomainError("initial point outside chart '" + chart.name + "'");

  const int n = step_count(t0, t1, dt);
  traj.times.reserve(n + 1);
  traj.states.reserve(n + 1);
  Point x = x0;
  chart.wrap(x);
  traj.times.push_back(t0);
  traj.states.push_back(x);
  if (n == 0) return traj;

  const double h = (t1 - t0) / n;
  const int dim = static_cast<int>(x.size());
  Point k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim), next(dim);

  for (int step = 0; step < n; ++step) {
    try {
      k1 = field(x);
      for (int i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
      k2 = field(tmp);
      for (int i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
      k3 = field(tmp);
      for (int i = 0; i < dim; ++i) tmp[i] = x[i] + h * k3[i];
      k4 = field(tmp);
    } catch (const Error&) {
      traj.truncated = true;
      traj.truncation_reason = "field evaluation failed";
      return traj;
    }
    for (int i = 0; i < dim; ++i)
      next[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    chart.wrap(next);
    if (!chart.in_domain(next)) {
      traj.truncated = true;
      traj.truncation_reason = "left chart domain";
      return traj;
    }
    x = next;
    traj.times.push_back(t0 + (step + 1) * h);
    traj.states.push_back(x);
  }
  return traj;
}

}  // namespace gmred
