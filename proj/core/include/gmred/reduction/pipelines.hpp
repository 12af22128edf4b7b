#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmred/reduction/scaling.hpp"
#include "gmred/reduction/standard.hpp"

namespace gmred {

/// A symplectic chart carrying both a scaling symmetry (with its quotient
/// onto the contact-type chart C) and a commuting ordinary symmetry (with
/// its quotient onto the Poisson chart P).  The Hamiltonian is degree-one
/// homogeneous for the scaling and invariant under the ordinary symmetry.
struct CompatiblePair {
  SymplecticSystem system;
  ScalingBundle scaling;   ///< total -> C
  Action standard;         ///< ordinary symmetry on the total chart
  QuotientChart standard_q;  ///< total -> P
};

/// Output of either reduction ordering.  `final_system` lives on the final
/// reduced chart K; intermediate stages are kept for inspection and for
/// reconstruction.
struct PipelineResult {
  JacobiSystem final_system;
  std::vector<std::string> stages;

  std::optional<PoissonSystem> poisson_stage;      ///< ordering A: on P
  std::optional<ScalingBundle> induced_scaling;    ///< ordering A: on P
  std::optional<ContactFormSystem> contact_stage;  ///< ordering B: on C
  std::optional<JacobiSystem> contact_jacobi;      ///< ordering B: on C
  std::optional<Action> induced_standard;          ///< ordering B: on C
};

/// Scaling structure induced on the ordinary quotient P:
/// act_P(s, y) = p(act(s, section(y))), F_P = F o section.
ScalingBundle induce_scaling_on_quotient(const CompatiblePair& cp,
                                         const QuotientChart& k_quotient);

/// Ordinary symmetry induced on the scaling quotient C:
/// act_C(s, z) = p_scal(act_std(s, section_scal(z))).
Action induce_standard_on_base(const CompatiblePair& cp);

/// Ordering A: ordinary quotient first (symplectic -> Poisson on P), then
/// scaling quotient (Poisson -> first-order bracket data on K).
PipelineResult pipeline_A(const CompatiblePair& cp,
                          const QuotientChart& k_quotient);

/// Ordering B: scaling quotient first (symplectic -> contact-type chart C,
/// then its induced bracket data), then ordinary quotient down to K.
PipelineResult pipeline_B(const CompatiblePair& cp,
                          const QuotientChart& k_quotient);

/// Chart map K_A -> K_B through the total space:
/// psi = p_B o p_scal o section_std o section_A.
CoordMap equivalence_psi(const CompatiblePair& cp, const QuotientChart& k_a,
                         const QuotientChart& k_b);

}  // namespace gmred
