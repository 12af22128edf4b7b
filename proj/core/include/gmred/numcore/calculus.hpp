#pragma once

#include <type_traits>

#include "gmred/numcore/field.hpp"

namespace gmred {

namespace detail {
template <class V>
using ElemOf = typename std::decay_t<V>::value_type;
}

/// Exterior derivative of a scalar field: df in chart components.
OneFormField differential(const ScalarField& f);

/// Jacobian of a map: J(i, j) = d m^i / d x^j.
MatrixField jacobian(const CoordMap& m);

/// Derivative of f along the vector field X (pointwise df(X)).
ScalarField derive_along(const VectorField& x_field, const ScalarField& f);

/// Lie bracket of vector fields: [X, Y] = (DY) X - (DX) Y.
VectorField lie_bracket(const VectorField& x_field, const VectorField& y_field);

/// Exterior derivative of a one-form: (d eta)_{ij} = d_i eta_j - d_j eta_i.
TwoFormField exterior_derivative(const OneFormField& eta);

/// Max |(d w)_{ijk}| over i<j<k at a point; zero for closed two-forms.
double closedness_residual(const TwoFormField& w, const Point& x);

}  // namespace gmred
