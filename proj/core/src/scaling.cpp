#include "gmred/symmetry/scaling.hpp"

#include <cmath>

#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/errors.hpp"

namespace gmred {

double homogeneity_residual(const ScalingBundle& b, double s, const Point& x) {
  return std::abs(b.scale(b.action.apply(s, x)) - s * b.scale(x));
}

double euler_residual(const ScalingBundle& b, const Point& x) {
  auto delta = generator(b.action);
  auto df = derive_along(delta, b.scale);
  return std::abs(df(x) - b.scale(x));
}

}  // namespace gmred
