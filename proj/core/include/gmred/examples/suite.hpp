#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmred/reconstruction/reconstruct.hpp"
#include "gmred/reduction/pipelines.hpp"
#include "gmred/structures/kirillov.hpp"

namespace gmred {

/// One way to lift reduced trajectories of a suite back to the total
/// chart: which trivialization to use and how the log-fiber factor alpha
/// is produced.
struct ReconstructionPreset {
  std::string label;
  ScalingBundle bundle;       ///< total chart -> reduced chart
  VectorField full_field;     ///< dynamics upstairs (direct comparison)
  VectorField reduced_field;  ///< dynamics on the bundle base

  enum class Alpha {
    BracketIntegrand,  ///< alpha' = integrand(phi)/s0, integrand = {F, H}
    ReebDrift,         ///< alpha' = -drift(h)(gamma), drift = Reeb field
    EDrift,            ///< alpha' = +drift(h)(gamma), drift = E field
  };
  Alpha alpha = Alpha::BracketIntegrand;
  ScalarField integrand;  ///< BracketIntegrand only
  VectorField drift;      ///< ReebDrift / EDrift only
  ScalarField reduced_h;  ///< ReebDrift / EDrift only
};

/// Run a preset from the given start over the given grid.
ReconstructedTrajectory run_preset(const ReconstructionPreset& preset,
                                   const Point& x0, double t0, double t1,
                                   double dt);

/// Named first-order bracket chart of a suite.
struct NamedJacobi {
  std::string label;
  JacobiSystem system;
};

/// A Poisson chart carrying a scaling structure whose quotient is one of
/// the suite's Jacobi charts; drives the projection-commutation and
/// generic-reduction checks.
struct PoissonPresentation {
  std::string label;
  PoissonSystem system;  ///< restricted to the bundle's total chart
  ScalingBundle bundle;
  int reduces_to = -1;   ///< index into ExampleSuite::jacobi_charts
};

/// A fully wired example family: the symplectic total space with its two
/// commuting symmetries (when present), every quotient chart, directly
/// coded reference formulas for each derived object, and defaults for the
/// command-line tools.  The verification harness reconstructs each derived
/// object generically and compares against the references stored here.
struct ExampleSuite {
  std::string name;

  // Symplectic total chart with commuting scaling + ordinary symmetries.
  std::optional<CompatiblePair> pair;
  std::optional<QuotientChart> k_quotient_a;  ///< P -> K (ordering A)
  std::optional<QuotientChart> k_quotient_b;  ///< C -> K (ordering B)
  /// Total chart in coordinates adapted to the scaling (scale coordinate
  /// first); the ordinary quotient in these coordinates gives the
  /// `rescaled_poisson_closed` chart.
  std::optional<QuotientChart> rescaled_quotient;

  // Directly coded reference objects.
  std::optional<VectorField> total_field_closed;         ///< X_H upstairs
  std::optional<PoissonSystem> quotient_poisson_closed;  ///< on P
  std::optional<PoissonSystem> rescaled_poisson_closed;  ///< scaled coords
  std::optional<ContactFormSystem> contact_closed;       ///< eta on C
  std::optional<VectorField> reeb_closed;                ///< on C
  std::optional<VectorField> contact_field_closed;       ///< X_h on C
  std::optional<VectorField> reduced_field_closed;       ///< X_h on K
  std::vector<NamedJacobi> jacobi_charts;
  int contact_jacobi_index = -1;  ///< jacobi_charts index for the C chart
  int reduced_a_index = -1;       ///< jacobi_charts index for ordering A
  int reduced_b_index = -1;       ///< jacobi_charts index for ordering B

  // Poisson charts with scaling structures (reduce onto jacobi_charts).
  std::vector<PoissonPresentation> poisson_presentations;

  // Lie-coalgebra extras (so3 only).
  std::optional<PoissonSystem> lie_poisson;  ///< on the mu chart
  std::optional<ScalarField> casimir;
  std::optional<KirillovAtlas> atlas;
  /// Coefficients of the Lie bracket of two algebra elements.
  std::function<std::array<double, 3>(const std::array<double, 3>&,
                                      const std::array<double, 3>&)>
      lie_bracket_coeffs;
  /// Chart-local representatives (one per atlas chart) of the linear
  /// section with the given coefficients.
  std::function<std::vector<ScalarField>(const std::array<double, 3>&)>
      lie_section_locals;
  /// Directly coded chart expression of the symbol field of that section.
  std::function<VectorField(int, const std::array<double, 3>&)>
      lie_symbol_closed;

  // Defaults for the command-line tools.
  Point default_x0;   ///< on the full system's chart
  Point default_k0;   ///< on the final reduced chart
  double default_t0 = 0.0;
  double default_t1 = 1.0;
  double default_dt = 1e-3;
  std::vector<ReconstructionPreset> reconstructions;

  /// Chart the full dynamics lives on.
  const Chart& full_chart() const;
  /// Dynamics for `simulate`: the symplectic Hamiltonian field, or the
  /// Poisson one for the Lie-coalgebra suite.
  VectorField full_field() const;
  /// Final reduced system for `simulate --reduced` / `reduce`; pipeline is
  /// 'A' or 'B' (ignored by suites without a symplectic total chart).
  JacobiSystem reduced_system(char pipeline) const;
};

/// Planar central-force oscillator in polar coordinates on configuration
/// and velocity angles, with the dilation scaling and the diagonal circle
/// symmetry.
ExampleSuite build_ho();

/// Cotangent chart {p_{i0} > 0} of R^n with the fiberwise-linear
/// Hamiltonian of the vector field with coefficients y (functions of q),
/// fiber scaling, and translation symmetry along q[translation_axis]
/// (0-based; the y must not depend on that coordinate).
ExampleSuite build_linear_ctq(int n, int i0, std::vector<ScalarField> y,
                              int translation_axis);

/// Dual of so(3) with its linear (Lie-Poisson) bracket, the radial
/// scaling, and the two projective charts glued into an atlas.
ExampleSuite build_so3();

/// Registry: build a suite by CLI name ("ho", "linear", "so3").
ExampleSuite build_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace gmred
