#include "gmred/structures/contact.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmred/config.hpp"
#include "gmred/numcore/calculus.hpp"

namespace gmred {

namespace {

/// B = A + eta eta^T at x, together with eta(x).
template <class T>
void contact_data(const OneFormField& eta, const Pt<T>& x, Mat<T>& b,
                  Pt<T>& eta_x) {
  const int n = static_cast<int>(x.size());
  Pt<Dual<T>> xd(n);
  for (int j = 0; j < n; ++j) xd[j] = Dual<T>(x[j]);
  Mat<T> grad(n, n);  // grad(v, c) = d_v eta_c
  for (int v = 0; v < n; ++v) {
    xd[v].b = T(1.0);
    auto row = eta(xd);
    for (int c = 0; c < n; ++c) grad(v, c) = row[c].b;
    xd[v].b = T(0.0);
  }
  eta_x = eta(x);
  b = Mat<T>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = grad(i, j) - grad(j, i) + eta_x[i] * eta_x[j];
}

/// Solve the contact conditions A X = w, eta(X) = c.  The two right-hand
/// sides are consistent for the systems we build, so the square system
/// B X = w + c eta has the same solution; plain-double evaluations go
/// through the stacked QR least-squares form and validate its residual.
template <class T>
Pt<T> contact_solve(const Mat<T>& b, const Pt<T>& eta_x, const Pt<T>& w,
                    const T& c) {
  const int n = static_cast<int>(eta_x.size());
  if constexpr (std::is_same_v<T, double>) {
    Eigen::MatrixXd stacked(n + 1, n);
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        stacked(i, j) = b(i, j) - eta_x[i] * eta_x[j];
      rhs(i) = w[i];
    }
    for (int j = 0; j < n; ++j) stacked(n, j) = eta_x[j];
    rhs(n) = c;
    Eigen::VectorXd sol = stacked.colPivHouseholderQr().solve(rhs);
    double resid = (stacked * sol - rhs).lpNorm<Eigen::Infinity>();
    if (!(resid <= 1e-9 * (1.0 + rhs.lpNorm<Eigen::Infinity>())))
      throw DegeneracyError("contact solve residual " + std::to_string(resid));
    Pt<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = sol(i);
    return out;
  } else {
    Pt<T> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = w[i] + c * eta_x[i];
    return lu_solve(b, rhs);
  }
}

}  // namespace

MatrixField contact_matrix(const ContactFormSystem& sys) {
  auto eta = sys.eta;
  MatrixField out([eta](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    Mat<T> b;
    Pt<T> ex;
    contact_data(eta, x, b, ex);
    return b;
  });
  out.restrict_depth(eta.max_depth() - 1);
  return out;
}

VectorField reeb_field(const ContactFormSystem& sys) {
  auto eta = sys.eta;
  VectorField out(
      [eta](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        Mat<T> b;
        Pt<T> ex;
        contact_data(eta, x, b, ex);
        Pt<T> zero(x.size(), T(0.0));
        return contact_solve(b, ex, zero, T(1.0));
      },
      sys.chart.dim(), sys.chart.dim());
  out.restrict_depth(eta.max_depth() - 1);
  return out;
}

VectorField contact_hvf(const ContactFormSystem& sys, const ScalarField& h) {
  auto eta = sys.eta;
  auto dh = differential(h);
  VectorField out(
      [eta, h, dh](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        const int n = static_cast<int>(x.size());
        Mat<T> b;
        Pt<T> ex;
        contact_data(eta, x, b, ex);
        Pt<T> zero(n, T(0.0));
        auto r = contact_solve(b, ex, zero, T(1.0));
        auto g = dh(x);
        T rh(0.0);
        for (int i = 0; i < n; ++i) rh += r[i] * g[i];
        Pt<T> w(n);
        for (int i = 0; i < n; ++i) w[i] = g[i] - rh * ex[i];
        return contact_solve(b, ex, w, h(x));
      },
      sys.chart.dim(), sys.chart.dim());
  out.restrict_depth(std::min({eta.max_depth() - 1, dh.max_depth(),
                               h.max_depth()}));
  return out;
}

VectorField contact_hvf(const ContactFormSystem& sys) {
  return contact_hvf(sys, sys.hamiltonian);
}

JacobiSystem jacobi_from_contact(const ContactFormSystem& sys) {
  auto eta = sys.eta;
  BivectorField pi([eta](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    const int n = static_cast<int>(x.size());
    Mat<T> b;
    Pt<T> ex;
    contact_data(eta, x, b, ex);
    auto binv = lu_inverse(b);
    auto r = lu_solve(b, ex);
    Mat<T> p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = binv(i, j) - r[i] * r[j];
    return p;
  });
  pi.restrict_depth(eta.max_depth() - 1);
  auto r_field = reeb_field(sys);
  VectorField e(
      [r_field](const auto& x) {
        auto r = r_field(x);
        for (auto& v : r) v = -v;
        return r;
      },
      sys.chart.dim(), sys.chart.dim());
  e.restrict_depth(r_field.max_depth());
  return JacobiSystem{sys.chart, pi, e, sys.hamiltonian};
}

double contact_axiom_residual(const ContactFormSystem& sys, const Point& x) {
  const int n = static_cast<int>(x.size());
  Mat<double> b;
  Point ex;
  contact_data(sys.eta, x, b, ex);
  auto r = reeb_field(sys)(x);
  double pairing = 0.0;
  for (int i = 0; i < n; ++i) pairing += ex[i] * r[i];
  double worst = std::abs(pairing - 1.0);
  for (int i = 0; i < n; ++i) {
    double ar = 0.0;
    for (int j = 0; j < n; ++j) ar += (b(i, j) - ex[i] * ex[j]) * r[j];
    worst = std::max(worst, std::abs(ar));
  }
  return worst;
}

double contact_solve_residual(const ContactFormSystem& sys,
                              const ScalarField& h, const Point& x) {
  const int n = static_cast<int>(x.size());
  Mat<double> b;
  Point ex;
  contact_data(sys.eta, x, b, ex);
  auto r = reeb_field(sys)(x);
  auto g = differential(h)(x);
  double rh = 0.0;
  for (int i = 0; i < n; ++i) rh += r[i] * g[i];
  auto v = contact_hvf(sys, h)(x);

  Eigen::MatrixXd stacked(n + 1, n);
  Eigen::VectorXd rhs(n + 1), sol(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) stacked(i, j) = b(i, j) - ex[i] * ex[j];
    rhs(i) = g[i] - rh * ex[i];
    sol(i) = v[i];
  }
  for (int j = 0; j < n; ++j) stacked(n, j) = ex[j];
  rhs(n) = h(x);
  return (stacked * sol - rhs).lpNorm<Eigen::Infinity>();
}

double contact_condition(const ContactFormSystem& sys, const Point& x) {
  const int n = static_cast<int>(x.size());
  Mat<double> b;
  Point ex;
  contact_data(sys.eta, x, b, ex);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = b(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  double smin = svd.singularValues()(n - 1);
  double smax = svd.singularValues()(0);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

void check_contact_nondegenerate(const ContactFormSystem& sys,
                                 const Point& x) {
  double cond = contact_condition(sys, x);
  if (!(cond < kContactConditionLimit))
    throw DegeneracyError("contact matrix nearly singular (cond " +
                          std::to_string(cond) + ")");
}

}  // namespace gmred
