#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/structures/poisson.hpp"

namespace gmred {

/// Symplectic chart: closed nondegenerate two-form W plus a Hamiltonian.
struct SymplecticSystem {
  Chart chart;
  TwoFormField omega;
  ScalarField hamiltonian;
};

/// Hamiltonian field solving W^T X = dH, so that X(f) = {f, H} with the
/// bracket of `induced_poisson`.  Orientation anchor: on the canonical
/// chart (q, p) with W = dq^dp, H = p gives X = d/dq.
VectorField symplectic_hvf(const SymplecticSystem& sys);
VectorField symplectic_hvf(const SymplecticSystem& sys, const ScalarField& h);

/// Poisson tensor of the symplectic form: Pi = -W^{-1}.
BivectorField induced_poisson(const SymplecticSystem& sys);

/// View the symplectic chart as a Poisson chart (same Hamiltonian).
PoissonSystem as_poisson(const SymplecticSystem& sys);

/// Bracket {f, g} of the induced Poisson tensor.
ScalarField symplectic_bracket(const SymplecticSystem& sys,
                               const ScalarField& f, const ScalarField& g);

/// Max |(dW)_{ijk}| at a point (zero iff closed there).
double symplectic_closedness_residual(const SymplecticSystem& sys,
                                      const Point& x);

}  // namespace gmred
