#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/symmetry/action.hpp"
#include "gmred/symmetry/quotient.hpp"

namespace gmred {

/// Principal scaling structure over a chart: a free multiplicative action
/// together with a positive degree-one homogeneous function F, and a chart
/// presentation of the orbit quotient.  (F, project) trivializes the chart
/// as fiber x base.
struct ScalingBundle {
  QuotientChart quotient;
  Action action;      ///< GroupKind::RTimes on the total chart
  ScalarField scale;  ///< F: positive, homogeneous of degree one
};

/// |F(act_s(x)) - s F(x)|: degree-one homogeneity at a sample.
double homogeneity_residual(const ScalingBundle& b, double s, const Point& x);

/// |Delta(F)(x) - F(x)| where Delta is the action generator; the
/// infinitesimal version of degree-one homogeneity.
double euler_residual(const ScalingBundle& b, const Point& x);

}  // namespace gmred
