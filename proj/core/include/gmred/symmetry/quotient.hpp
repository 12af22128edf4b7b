#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/symmetry/action.hpp"

namespace gmred {

/// Chart presentation of a quotient: a projection from the total chart onto
/// the base chart and a section picking one representative per orbit.
struct QuotientChart {
  Chart total;
  Chart base;
  CoordMap project;  ///< total -> base
  CoordMap section;  ///< base -> total, with project o section = id
};

/// Chart distance between project(section(y)) and y.
double section_residual(const QuotientChart& q, const Point& y);

/// Chart distance between project(act_s(x)) and project(x): the projection
/// must not see motion along the fibers.
double fiber_independence_residual(const QuotientChart& q, const Action& a,
                                   double s, const Point& x);

}  // namespace gmred
