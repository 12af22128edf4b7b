#include "gmred/structures/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

ScalarField jacobi_bracket(const JacobiSystem& sys, const ScalarField& f,
                           const ScalarField& g) {
  auto pi = sys.pi;
  auto e = sys.e;
  auto df = differential(f);
  auto dg = differential(g);
  ScalarField out([pi, e, f, g, df, dg](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    auto p = pi(x);
    auto ev = e(x);
    auto fx = df(x);
    auto gx = dg(x);
    const int n = static_cast<int>(x.size());
    T acc(0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        acc += p(i, j) * (fx[i] * gx[j] - fx[j] * gx[i]);
    T ef(0.0), eg(0.0);
    for (int i = 0; i < n; ++i) {
      ef += ev[i] * fx[i];
      eg += ev[i] * gx[i];
    }
    return acc + f(x) * eg - g(x) * ef;
  });
  out.restrict_depth(std::min({pi.max_depth(), e.max_depth(), df.max_depth(),
                               dg.max_depth()}));
  return out;
}

VectorField jacobi_hvf(const JacobiSystem& sys, const ScalarField& h) {
  auto pi = sys.pi;
  auto e = sys.e;
  auto dh = differential(h);
  VectorField out(
      [pi, e, h, dh](const auto& x) {
        auto p = pi(x);
        auto ev = e(x);
        auto g = dh(x);
        auto v = p * g;
        auto hx = h(x);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= hx * ev[i];
        return v;
      },
      sys.chart.dim(), sys.chart.dim());
  out.restrict_depth(std::min({pi.max_depth(), e.max_depth(),
                               dh.max_depth(), h.max_depth()}));
  return out;
}

VectorField jacobi_hvf(const JacobiSystem& sys) {
  return jacobi_hvf(sys, sys.hamiltonian);
}

double jacobi_identity_residual(const JacobiSystem& sys, const ScalarField& f,
                                const ScalarField& g, const ScalarField& h,
                                const Point& x) {
  auto fg_h = jacobi_bracket(sys, jacobi_bracket(sys, f, g), h);
  auto gh_f = jacobi_bracket(sys, jacobi_bracket(sys, g, h), f);
  auto hf_g = jacobi_bracket(sys, jacobi_bracket(sys, h, f), g);
  return std::abs(fg_h(x) + gh_f(x) + hf_g(x));
}

}  // namespace gmred
