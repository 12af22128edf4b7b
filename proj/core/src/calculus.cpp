#include "gmred/numcore/calculus.hpp"

#include <algorithm>

namespace gmred {

OneFormField differential(const ScalarField& f) {
  OneFormField out([f](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    const int n = static_cast<int>(x.size());
    Pt<Dual<T>> xd(n);
    for (int j = 0; j < n; ++j) xd[j] = Dual<T>(x[j]);
    Pt<T> g(n);
    for (int i = 0; i < n; ++i) {
      xd[i].b = T(1.0);
      g[i] = f(xd).b;
      xd[i].b = T(0.0);
    }
    return g;
  });
  out.restrict_depth(f.max_depth() - 1);
  return out;
}

MatrixField jacobian(const CoordMap& m) {
  const int rows = m.dim_out();
  MatrixField out([m, rows](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    const int n = static_cast<int>(x.size());
    Pt<Dual<T>> xd(n);
    for (int j = 0; j < n; ++j) xd[j] = Dual<T>(x[j]);
    Mat<T> jac(rows, n);
    for (int j = 0; j < n; ++j) {
      xd[j].b = T(1.0);
      auto col = m(xd);
      for (int i = 0; i < rows; ++i) jac(i, j) = col[i].b;
      xd[j].b = T(0.0);
    }
    return jac;
  });
  out.restrict_depth(m.max_depth() - 1);
  return out;
}

ScalarField derive_along(const VectorField& x_field, const ScalarField& f) {
  ScalarField out([x_field, f](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    const int n = static_cast<int>(x.size());
    auto v = x_field(x);
    Pt<Dual<T>> xd(n);
    for (int j = 0; j < n; ++j) xd[j] = Dual<T>(x[j], v[j]);
    return f(xd).b;
  });
  out.restrict_depth(std::min(x_field.max_depth(), f.max_depth() - 1));
  return out;
}

VectorField lie_bracket(const VectorField& x_field, const VectorField& y_field) {
  const int dim = x_field.dim_in();
  VectorField out(
      [x_field, y_field](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        const int n = static_cast<int>(x.size());
        auto xv = x_field(x);
        auto yv = y_field(x);
        // Directional derivative (DY) X via one dual sweep, likewise (DX) Y.
        Pt<Dual<T>> along_x(n), along_y(n);
        for (int j = 0; j < n; ++j) {
          along_x[j] = Dual<T>(x[j], xv[j]);
          along_y[j] = Dual<T>(x[j], yv[j]);
        }
        auto dy_x = y_field(along_x);
        auto dx_y = x_field(along_y);
        Pt<T> out_v(n);
        for (int i = 0; i < n; ++i) out_v[i] = dy_x[i].b - dx_y[i].b;
        return out_v;
      },
      dim, dim);
  out.restrict_depth(
      std::min(x_field.max_depth(), y_field.max_depth()) - 1);
  return out;
}

TwoFormField exterior_derivative(const OneFormField& eta) {
  TwoFormField out([eta](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    const int n = static_cast<int>(x.size());
    Pt<Dual<T>> xd(n);
    for (int j = 0; j < n; ++j) xd[j] = Dual<T>(x[j]);
    Mat<T> deta(n, n);  // deta(i, j) = d_i eta_j - d_j eta_i
    Mat<T> grad(n, n);  // grad(v, c) = d_v eta_c
    for (int v = 0; v < n; ++v) {
      xd[v].b = T(1.0);
      auto row = eta(xd);
      for (int c = 0; c < n; ++c) grad(v, c) = row[c].b;
      xd[v].b = T(0.0);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) deta(i, j) = grad(i, j) - grad(j, i);
    return deta;
  });
  out.restrict_depth(eta.max_depth() - 1);
  return out;
}

double closedness_residual(const TwoFormField& w, const Point& x) {
  const int n = static_cast<int>(x.size());
  Pt<D1> xd(n);
  for (int j = 0; j < n; ++j) xd[j] = D1(x[j]);
  // grad[v] = matrix of d_v w_{ab}
  std::vector<Mat<double>> grad(n);
  for (int v = 0; v < n; ++v) {
    xd[v].b = 1.0;
    auto m = w(xd);
    Mat<double> g(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g(a, b) = m(a, b).b;
    grad[v] = g;
    xd[v].b = 0.0;
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double r = grad[i](j, k) + grad[j](k, i) + grad[k](i, j);
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

}  // namespace gmred
