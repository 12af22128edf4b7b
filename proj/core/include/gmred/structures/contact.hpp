#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/structures/jacobi.hpp"

namespace gmred {

/// Contact-type chart described by a one-form eta whose associated matrix
/// B = d(eta) + eta eta^T is invertible.  (On odd-dimensional charts this
/// is the usual contact condition; the operations below only require the
/// invertibility.)
struct ContactFormSystem {
  Chart chart;
  OneFormField eta;
  ScalarField hamiltonian;  ///< may be empty
};

/// B = A + eta eta^T with A_ij = d_i eta_j - d_j eta_i.
MatrixField contact_matrix(const ContactFormSystem& sys);

/// Reeb field: the unique R with eta(R) = 1 and i_R d(eta) = 0.  At plain
/// double depth the stacked system [A; eta^T] R = [0; 1] is solved by QR
/// least squares and the residual is validated; at dual depths the
/// equivalent square system B R = eta is solved by LU.
VectorField reeb_field(const ContactFormSystem& sys);

/// Contact Hamiltonian field: the unique X with i_X d(eta) = dh - R(h) eta
/// and eta(X) = h.  Solved like reeb_field; h = 1 returns the Reeb field.
VectorField contact_hvf(const ContactFormSystem& sys, const ScalarField& h);
VectorField contact_hvf(const ContactFormSystem& sys);

/// First-order bracket data induced by the contact form:
/// Pi = B^{-1} - R R^T (antisymmetric), E = -R.  The sign is fixed so that
/// jacobi_hvf of the result coincides with contact_hvf.
JacobiSystem jacobi_from_contact(const ContactFormSystem& sys);

/// max(|eta(R) - 1|, max_i |(A R)_i|) at a point.
double contact_axiom_residual(const ContactFormSystem& sys, const Point& x);

/// Residual of the defining stacked system [A; eta^T] X = [dh - R(h) eta; h]
/// for the field contact_hvf returns, at plain double depth.
double contact_solve_residual(const ContactFormSystem& sys,
                              const ScalarField& h, const Point& x);

/// Condition number of B at a point (SVD-based).
double contact_condition(const ContactFormSystem& sys, const Point& x);

/// Throws DegeneracyError when the condition number exceeds
/// kContactConditionLimit.
void check_contact_nondegenerate(const ContactFormSystem& sys, const Point& x);

}  // namespace gmred
