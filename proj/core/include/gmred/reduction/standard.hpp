#pragma once

#include "gmred/structures/jacobi.hpp"
#include "gmred/structures/poisson.hpp"
#include "gmred/structures/symplectic.hpp"
#include "gmred/symmetry/quotient.hpp"

namespace gmred {

/// Quotient by an ordinary (non-scaling) symmetry whose orbits the
/// projection collapses.  The symplectic chart descends to a Poisson chart:
/// Pi_red(y) = (Jp Pi Jp^T)(section(y)), H_red = H o section.
/// Requires (checked by callers/verification, not here): H invariant, form
/// invariant, projection fiber-independent.
PoissonSystem reduce_symplectic_by_standard(const SymplecticSystem& sys,
                                            const Action& sym,
                                            const QuotientChart& q);

/// Same quotient applied to first-order bracket data:
/// Pi_red = (Jp Pi Jp^T) o section, E_red = (Jp E) o section,
/// h_red = h o section.
JacobiSystem reduce_jacobi_by_standard(const JacobiSystem& sys,
                                       const Action& sym,
                                       const QuotientChart& q);

}  // namespace gmred
