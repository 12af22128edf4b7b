#include "gmred/integrate/quadrature.hpp"

#include "gmred/numcore/errors.hpp"

namespace gmred {

double simpson(const std::vector<double>& values, double h) {
  const int m = static_cast<int>(values.size());
  if (m == 0) throw UsageError("simpson needs at least one sample");
  if (m == 1) return 0.0;
  double acc = 0.0;
  int k = 0;
  for (; k + 2 < m; k += 2)
    acc += h / 3.0 * (values[k] + 4.0 * values[k + 1] + values[k + 2]);
  if (k + 1 < m) acc += 0.5 * h * (values[k] + values[k + 1]);
  return acc;
}

std::vector<double> cumulative_simpson(const std::vector<double>& values,
                                       double h) {
  const int m = static_cast<int>(values.size());
  if (m == 0) throw UsageError("cumulative_simpson needs at least one sample");
  std::vector<double> acc(m, 0.0);
  for (int k = 1; k < m; ++k) {
    if (k % 2 == 0) {
      acc[k] = acc[k - 2] +
               h / 3.0 * (values[k - 2] + 4.0 * values[k - 1] + values[k]);
    } else if (k == 1) {
      // Parabolic end rule through the first three samples; plain
      // trapezoid if only two samples exist at all.
      acc[k] = (m > 2) ? h / 12.0 * (5.0 * values[0] + 8.0 * values[1] -
                                     values[2])
                       : 0.5 * h * (values[0] + values[1]);
    } else {
      acc[k] = acc[k - 1] + h / 12.0 * (-values[k - 2] + 8.0 * values[k - 1] +
                                        5.0 * values[k]);
    }
  }
  return acc;
}

}  // namespace gmred
