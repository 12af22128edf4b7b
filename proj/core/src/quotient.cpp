#include "gmred/symmetry/quotient.hpp"

namespace gmred {

double section_residual(const QuotientChart& q, const Point& y) {
  auto x = q.section(y);
  auto back = q.project(x);
  return q.base.distance(back, y);
}

double fiber_independence_residual(const QuotientChart& q, const Action& a,
                                   double s, const Point& x) {
  auto moved = a.apply(s, x);
  return q.base.distance(q.project(moved), q.project(x));
}

}  // namespace gmred
