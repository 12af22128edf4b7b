#pragma once

#include <utility>
#include <vector>

#include "gmred/structures/jacobi.hpp"

namespace gmred {

/// Change of chart between two local presentations of the same bracket
/// geometry.  Functions transported between charts pick up the nonvanishing
/// factor a(y): u_from(y) = factor(y) * u_to(map(y)).
struct AtlasTransition {
  int from = 0;
  int to = 0;
  CoordMap map;        ///< chart_from -> chart_to, on the overlap
  ScalarField factor;  ///< conformal factor a(y) on the overlap
  /// Box of points (in chart `from`) lying inside the overlap.
  std::vector<std::pair<double, double>> overlap_box;
};

/// A Kirillov structure presented concretely: a family of first-order
/// bracket charts (Jacobi systems) glued by scalar transition factors.
/// A single-chart atlas is exactly a JacobiSystem.
struct KirillovAtlas {
  std::vector<JacobiSystem> charts;
  std::vector<AtlasTransition> transitions;

  const AtlasTransition& transition(int from, int to) const;
};

/// Symbol (first-order part) of bracketing against a section given by its
/// chart-local representatives h_locals: the Jacobi Hamiltonian field of
/// h_locals[i] on chart i.  On overlaps the symbols from two charts agree
/// under the coordinate change.
VectorField kirillov_symbol(const KirillovAtlas& atlas,
                            const std::vector<ScalarField>& h_locals, int i);

/// Chart distance between map_{ji}(map_{ij}(y)) and y.
double cocycle_residual(const KirillovAtlas& atlas, int i, int j,
                        const Point& y);

/// |a_{ij}(y) * a_{ji}(map_{ij}(y)) - 1|.
double factor_cocycle_residual(const KirillovAtlas& atlas, int i, int j,
                               const Point& y);

/// Bracket compatibility across a transition: transport u, v from chart j
/// into chart i and compare {u_i, v_i}_i with a_{ij} ({u, v}_j o map_{ij}).
double bracket_transport_residual(const KirillovAtlas& atlas, int i, int j,
                                  const ScalarField& u, const ScalarField& v,
                                  const Point& y);

/// |h_i(y) - a_{ij}(y) h_j(map_{ij}(y))|: the chart-local representatives
/// of a single section must be related by the transition factor.
double section_transport_residual(const KirillovAtlas& atlas,
                                  const std::vector<ScalarField>& h_locals,
                                  int i, int j, const Point& y);

/// Overlap agreement of kirillov_symbol: max-norm of
/// J(map_{ij}) X_i(y) - X_j(map_{ij}(y)).
double symbol_overlap_residual(const KirillovAtlas& atlas,
                               const std::vector<ScalarField>& h_locals,
                               int i, int j, const Point& y);

}  // namespace gmred
