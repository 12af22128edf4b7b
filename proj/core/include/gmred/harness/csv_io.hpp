#pragma once

#include <iosfwd>
#include <string>

#include "gmred/integrate/rk4.hpp"
#include "gmred/numcore/chart.hpp"
#include "gmred/reconstruction/reconstruct.hpp"
#include "gmred/structures/jacobi.hpp"

namespace gmred {

/// Shortest round-trippable decimal form (17 significant digits, C locale).
std::string g17(double v);

/// Header `t,<coord names...>`, one row per sample; a trailing comment line
/// records truncation, if any.
void write_trajectory_csv(std::ostream& os, const Chart& chart,
                          const Trajectory& traj);

/// Reconstruction table: reduced curve, horizontal lift, log-fiber factor,
/// assembled trajectory, direct integration, and the per-row chart
/// distance; footer comments carry the sup error and truncation flags.
void write_reconstruction_csv(std::ostream& os, const Chart& total,
                              const Chart& base,
                              const ReconstructedTrajectory& rt,
                              const Trajectory& direct);

/// Component table of a first-order bracket chart sampled on a regular
/// interior grid of its sample box: coordinates, upper-triangle bivector
/// entries, E components, the Hamiltonian field, and the Hamiltonian.
void write_jacobi_table_csv(std::ostream& os, const JacobiSystem& sys,
                            const VectorField& field, int points_per_axis);

}  // namespace gmred
