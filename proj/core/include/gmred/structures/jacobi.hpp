#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"

namespace gmred {

/// Jacobi chart: bivector Pi plus vector field E defining the first-order
/// bracket {f, g} = Pi(df, dg) + f E(g) - g E(f).
struct JacobiSystem {
  Chart chart;
  BivectorField pi;
  VectorField e;
  ScalarField hamiltonian;  ///< may be empty
};

ScalarField jacobi_bracket(const JacobiSystem& sys, const ScalarField& f,
                           const ScalarField& g);

/// First-order part of f -> {f, h}: X_h = Pi(dh, .) - h E.
VectorField jacobi_hvf(const JacobiSystem& sys, const ScalarField& h);
VectorField jacobi_hvf(const JacobiSystem& sys);

/// |{{f, g}, h} + cyclic| at a point; zero for genuine Jacobi structures.
double jacobi_identity_residual(const JacobiSystem& sys, const ScalarField& f,
                                const ScalarField& g, const ScalarField& h,
                                const Point& x);

}  // namespace gmred
