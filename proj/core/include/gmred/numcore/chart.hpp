#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gmred/numcore/field.hpp"

namespace gmred {

/// A coordinate chart: a named box of coordinates, some of which are
/// angles.  Angles are never wrapped inside differentiable formulas; the
/// integrator wraps them after completed steps and `distance` compares
/// them through their (sin, cos) embedding.
struct Chart {
  std::string name;
  std::vector<std::string> coords;
  std::vector<bool> angle;  ///< per-coordinate: true if 2*pi-periodic
  /// Optional open-domain predicate (positivity constraints etc.).
  std::function<bool(const Point&)> domain_check;
  /// Per-coordinate box from which test points are drawn.
  std::vector<std::pair<double, double>> sample_box;

  int dim() const { return static_cast<int>(coords.size()); }

  /// Wrap angle coordinates into [0, 2*pi).
  void wrap(Point& x) const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (size_t i = 0; i < x.size(); ++i) {
      if (i < angle.size() && angle[i]) {
        x[i] = std::fmod(x[i], two_pi);
        if (x[i] < 0.0) x[i] += two_pi;
      }
    }
  }

  /// All coordinates finite and inside the open domain.
  bool in_domain(const Point& x) const {
    for (double v : x)
      if (!std::isfinite(v)) return false;
    if (domain_check && !domain_check(x)) return false;
    return true;
  }

  /// Max-norm distance; angle coordinates measured by chord length on the
  /// unit circle so 0 and 2*pi are close.
  double distance(const Point& a, const Point& b) const {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      double di;
      if (i < angle.size() && angle[i]) {
        di = std::hypot(std::sin(a[i]) - std::sin(b[i]),
                        std::cos(a[i]) - std::cos(b[i]));
      } else {
        di = std::abs(a[i] - b[i]);
      }
      if (di > d) d = di;
    }
    return d;
  }
};

}  // namespace gmred
