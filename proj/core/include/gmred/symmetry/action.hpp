#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"

namespace gmred {

/// One-parameter group acting on a chart.
enum class GroupKind {
  RTimes,  ///< multiplicative positive reals (identity 1)
  RAdd,    ///< additive reals (identity 0)
  Circle,  ///< additive reals mod 2*pi (identity 0)
};

/// A smooth action act(s, x).  Stored as a map on the concatenated input
/// [s, x...] so the group parameter can be differentiated like any other
/// coordinate (e.g. for the infinitesimal generator).
struct Action {
  GroupKind kind = GroupKind::RTimes;
  CoordMap map;  ///< dim_in = 1 + chart dim, dim_out = chart dim

  double identity() const {
    return kind == GroupKind::RTimes ? 1.0 : 0.0;
  }
  double compose(double s1, double s2) const {
    return kind == GroupKind::RTimes ? s1 * s2 : s1 + s2;
  }
  double inverse(double s) const {
    return kind == GroupKind::RTimes ? 1.0 / s : -s;
  }

  template <class T>
  Pt<T> apply(const T& s, const Pt<T>& x) const {
    Pt<T> in;
    in.reserve(x.size() + 1);
    in.push_back(s);
    in.insert(in.end(), x.begin(), x.end());
    return map(in);
  }
  Point apply(double s, const Point& x) const {
    return apply<double>(s, x);
  }
};

/// Infinitesimal generator: Delta(x) = d/ds act(s, x) at the identity.
VectorField generator(const Action& a);

/// |f(act_s(x)) - f(x)|: invariance of a scalar under one group element.
double invariance_residual(const Action& a, const ScalarField& f, double s,
                           const Point& x);

/// Chart distance between act(s1, act(s2, x)) and act(s1 * s2, x).
double composition_residual(const Action& a, const Chart& chart, double s1,
                            double s2, const Point& x);

}  // namespace gmred
