#include "gmred/structures/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

ScalarField poisson_bracket(const PoissonSystem& sys, const ScalarField& f,
                            const ScalarField& g) {
  auto pi = sys.pi;
  auto df = differential(f);
  auto dg = differential(g);
  ScalarField out([pi, df, dg](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    auto p = pi(x);
    auto fx = df(x);
    auto gx = dg(x);
    const int n = static_cast<int>(x.size());
    T acc(0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        acc += p(i, j) * (fx[i] * gx[j] - fx[j] * gx[i]);
    return acc;
  });
  out.restrict_depth(std::min({pi.max_depth(), df.max_depth(),
                               dg.max_depth()}));
  return out;
}

VectorField poisson_hvf(const PoissonSystem& sys, const ScalarField& h) {
  auto pi = sys.pi;
  auto dh = differential(h);
  VectorField out(
      [pi, dh](const auto& x) {
        auto p = pi(x);
        auto g = dh(x);
        return p * g;
      },
      sys.chart.dim(), sys.chart.dim());
  out.restrict_depth(std::min(pi.max_depth(), dh.max_depth()));
  return out;
}

VectorField poisson_hvf(const PoissonSystem& sys) {
  return poisson_hvf(sys, sys.hamiltonian);
}

double jacobi_identity_residual(const PoissonSystem& sys, const ScalarField& f,
                                const ScalarField& g, const ScalarField& h,
                                const Point& x) {
  auto fg_h = poisson_bracket(sys, poisson_bracket(sys, f, g), h);
  auto gh_f = poisson_bracket(sys, poisson_bracket(sys, g, h), f);
  auto hf_g = poisson_bracket(sys, poisson_bracket(sys, h, f), g);
  return std::abs(fg_h(x) + gh_f(x) + hf_g(x));
}

}  // namespace gmred
