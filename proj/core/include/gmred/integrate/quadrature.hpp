#pragma once

#include <vector>

namespace gmred {

/// Composite Simpson integral of uniformly sampled values (spacing h).
/// An odd trailing interval is closed with the trapezoid rule.
double simpson(const std::vector<double>& values, double h);

/// Running integral A[k] = integral over [t0, t0 + k h] of the sampled
/// integrand.  Even prefixes use composite Simpson (exact for cubics); odd
/// prefixes are closed with the three-point parabolic end rule (exact for
/// quadratics, O(h^4) local error otherwise), so the whole table converges
/// at fourth order.  A[0] = 0.
std::vector<double> cumulative_simpson(const std::vector<double>& values,
                                       double h);

}  // namespace gmred
