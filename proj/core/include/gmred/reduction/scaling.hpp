#pragma once

#include "gmred/structures/contact.hpp"
#include "gmred/structures/jacobi.hpp"
#include "gmred/structures/poisson.hpp"
#include "gmred/structures/symplectic.hpp"
#include "gmred/symmetry/scaling.hpp"

namespace gmred {

/// Quotient of a symplectic chart by a scaling symmetry with degree-one
/// homogeneous Hamiltonian.  The base inherits the contact-type one-form
/// eta = (section^* lambda) / (F o section) with lambda = -i_Delta W, and
/// the Hamiltonian descends as h = hom_to_section(H).
ContactFormSystem reduce_symplectic_by_scaling(const SymplecticSystem& sys,
                                               const ScalingBundle& b);

/// The covariant one-form lambda_j = -Delta^i W_{ij} on the total chart
/// (building block of the scaling reduction; exposed for tests).
OneFormField momentum_one_form(const SymplecticSystem& sys,
                               const ScalingBundle& b);

/// Quotient of a Poisson chart by a scaling symmetry.  The base inherits
/// first-order bracket data (the fiberwise-linear structure in this chart):
///   Pi_red^{ij}(y) = F(sigma(y)) (Jp Pi Jp^T)(sigma(y)),
///   E_red^i(y)     = {F, p_i}(sigma(y)),
///   h = hom_to_section(H),
/// normalized so that {h1, h2}_red o p = (1/F) {F (h1 o p), F (h2 o p)}.
JacobiSystem reduce_poisson_by_scaling(const PoissonSystem& sys,
                                       const ScalingBundle& b);

}  // namespace gmred
