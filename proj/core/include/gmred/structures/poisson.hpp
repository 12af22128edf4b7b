#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"

namespace gmred {

/// Poisson manifold chart: antisymmetric bivector Pi with vanishing
/// Schouten bracket (checked numerically, not enforced structurally),
/// optionally carrying a Hamiltonian.
struct PoissonSystem {
  Chart chart;
  BivectorField pi;
  ScalarField hamiltonian;  ///< may be empty
};

/// {f, g} = sum_{ij} Pi^{ij} d_i f d_j g, evaluated in explicitly
/// antisymmetrized pairs so {f, f} is exactly zero in floating point.
ScalarField poisson_bracket(const PoissonSystem& sys, const ScalarField& f,
                            const ScalarField& g);

/// Hamiltonian vector field of h: X_h = Pi(dh, .), i.e. X_h(f) = {f, h}.
VectorField poisson_hvf(const PoissonSystem& sys, const ScalarField& h);

/// Field of the system's own Hamiltonian.
VectorField poisson_hvf(const PoissonSystem& sys);

/// |{{f, g}, h} + {{g, h}, f} + {{h, f}, g}| at a point.
double jacobi_identity_residual(const PoissonSystem& sys, const ScalarField& f,
                                const ScalarField& g, const ScalarField& h,
                                const Point& x);

}  // namespace gmred
