#pragma once

#include "gmred/numcore/field.hpp"
#include "gmred/symmetry/scaling.hpp"

namespace gmred {

/// Restrict a degree-one homogeneous function to the section:
/// h(y) = H(section(y)) / F(section(y)).
ScalarField hom_to_section(const ScalarField& hom, const ScalingBundle& b);

/// Homogeneous extension of a base function: H(x) = F(x) h(project(x)).
ScalarField section_to_hom(const ScalarField& h, const ScalingBundle& b);

/// |H(act_s(x)) - s H(x)|: degree-one homogeneity of a candidate H.
double hamiltonian_homogeneity_residual(const ScalarField& hom,
                                        const ScalingBundle& b, double s,
                                        const Point& x);

/// |section_to_hom(hom_to_section(H)) - H| at a point (round trip; zero for
/// degree-one homogeneous H).
double hom_round_trip_residual(const ScalarField& hom, const ScalingBundle& b,
                               const Point& x);

}  // namespace gmred
