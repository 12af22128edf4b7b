#pragma once

namespace gmred {

// Global sign conventions.  All structure operations and tests are anchored
// to these; flipping one constant without revisiting the anchors in
// tests/test_structures.cpp will break the build on purpose.
//
// Hamiltonian fields act as X_H(f) = {f, H}.  Canonical anchors:
// {q, p} = +1, H = p generates d/dq, and the planar oscillator
// H = (q^2 + p^2)/2 flows (1, 0) -> (0, -1).

/// Sign of the 1/F conformal factor relating the reduced (fiberwise-linear)
/// bracket to the total-space bracket:
/// {h1, h2}_red o p = kReducedBracketSign * (1/F) {F (h1 o p), F (h2 o p)}.
inline constexpr double kReducedBracketSign = +1.0;

/// Sign relating momentum-symbol brackets to the Lie bracket on so(3)*
/// coadjoint charts: {h_xi, h_nu}_red = kLieCorrespondenceSign * h_[xi, nu].
inline constexpr double kLieCorrespondenceSign = -1.0;

/// Condition-number threshold above which a contact solve is reported as
/// degenerate instead of returning garbage.
inline constexpr double kContactConditionLimit = 1e12;

/// Default RNG seed for verification sampling.
inline constexpr unsigned long long kDefaultSeed = 42;

}  // namespace gmred
