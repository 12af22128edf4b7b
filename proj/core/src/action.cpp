#include "gmred/symmetry/action.hpp"

#include <cmath>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

VectorField generator(const Action& a) {
  auto map = a.map;
  const double id = a.identity();
  const int dim = a.map.dim_out();
  VectorField out(
      [map, id](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        Pt<Dual<T>> in;
        in.reserve(x.size() + 1);
        in.emplace_back(T(id), T(1.0));
        for (const auto& xi : x) in.emplace_back(xi, T(0.0));
        auto moved = map(in);
        Pt<T> v(moved.size());
        for (size_t i = 0; i < moved.size(); ++i) v[i] = moved[i].b;
        return v;
      },
      dim, dim);
  out.restrict_depth(a.map.max_depth() - 1);
  return out;
}

double invariance_residual(const Action& a, const ScalarField& f, double s,
                           const Point& x) {
  return std::abs(f(a.apply(s, x)) - f(x));
}

double composition_residual(const Action& a, const Chart& chart, double s1,
                            double s2, const Point& x) {
  auto lhs = a.apply(s1, a.apply(s2, x));
  auto rhs = a.apply(a.compose(s1, s2), x);
  return chart.distance(lhs, rhs);
}

}  // namespace gmred
