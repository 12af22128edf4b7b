#include "gmred/structures/symplectic.hpp"

#include <algorithm>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

VectorField symplectic_hvf(const SymplecticSystem& sys, const ScalarField& h) {
  auto omega = sys.omega;
  auto dh = differential(h);
  VectorField out(
      [omega, dh](const auto& x) {
        auto w = omega(x);
        auto g = dh(x);
        return lu_solve(w.transposed(), g);
      },
      sys.chart.dim(), sys.chart.dim());
  out.restrict_depth(std::min(omega.max_depth(), dh.max_depth()));
  return out;
}

VectorField symplectic_hvf(const SymplecticSystem& sys) {
  return symplectic_hvf(sys, sys.hamiltonian);
}

BivectorField induced_poisson(const SymplecticSystem& sys) {
  auto omega = sys.omega;
  BivectorField out([omega](const auto& x) {
    auto w = omega(x);
    auto inv = lu_inverse(w);
    Mat<detail::ElemOf<decltype(x)>> pi(inv.rows(), inv.cols());
    for (int i = 0; i < inv.rows(); ++i)
      for (int j = 0; j < inv.cols(); ++j) pi(i, j) = -inv(i, j);
    return pi;
  });
  out.restrict_depth(omega.max_depth());
  return out;
}

PoissonSystem as_poisson(const SymplecticSystem& sys) {
  return PoissonSystem{sys.chart, induced_poisson(sys), sys.hamiltonian};
}

ScalarField symplectic_bracket(const SymplecticSystem& sys,
                               const ScalarField& f, const ScalarField& g) {
  return poisson_bracket(as_poisson(sys), f, g);
}

double symplectic_closedness_residual(const SymplecticSystem& sys,
                                      const Point& x) {
  return closedness_residual(sys.omega, x);
}

}  // namespace gmred
