#pragma once

#include <string>
#include <vector>

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"

namespace gmred {

/// Sampled solution of an initial value problem.  `states[k]` is the state
/// at `times[k]`; row 0 is the initial condition.  If the solution left the
/// chart domain (or became non-finite) the trajectory stops at the last
/// valid sample and `truncated` is set.
struct Trajectory {
  std::vector<double> times;
  std::vector<Point> states;
  bool truncated = false;
  std::string truncation_reason;

  size_t size() const { return times.size(); }
};

/// Number of fixed RK4 steps used for the span [t0, t1] at nominal step dt:
/// n = max(1, round((t1 - t0) / dt)); the actual step is (t1 - t0) / n.
/// A zero-length span yields a single-sample trajectory.
int step_count(double t0, double t1, double dt);

/// Classical fixed-step RK4.  Angle coordinates are wrapped after each
/// completed step (never at stage evaluations).  A step whose result is
/// non-finite or outside the chart domain is discarded and the trajectory
/// is truncated at the previous sample.
Trajectory rk4_flow(const VectorField& field, const Chart& chart,
                    const Point& x0, double t0, double t1, double dt);

}  // namespace gmred
