#include "gmred/reduction/scaling.hpp"

#include <algorithm>

#include "gmred/config.hpp"
#include "gmred/numcore/calculus.hpp"
#include "gmred/reduction/homogeneous.hpp"

namespace gmred {

OneFormField momentum_one_form(const SymplecticSystem& sys,
                               const ScalingBundle& b) {
  auto omega = sys.omega;
  auto delta = generator(b.action);
  OneFormField out([omega, delta](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    auto w = omega(x);
    auto d = delta(x);
    const int n = static_cast<int>(x.size());
    Pt<T> lam(n, T(0.0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) lam[j] -= d[i] * w(i, j);
    return lam;
  });
  out.restrict_depth(std::min(omega.max_depth(), delta.max_depth()));
  return out;
}

ContactFormSystem reduce_symplectic_by_scaling(const SymplecticSystem& sys,
                                               const ScalingBundle& b) {
  auto lam = momentum_one_form(sys, b);
  auto sec = b.quotient.section;
  auto jsec = jacobian(sec);
  auto f = b.scale;
  OneFormField eta([lam, sec, jsec, f](const auto& y) {
    using T = detail::ElemOf<decltype(y)>;
    auto x = sec(y);
    auto j = jsec(y);  // (total x base)
    auto l = lam(x);
    auto fx = f(x);
    const int base_dim = j.cols();
    const int total_dim = j.rows();
    Pt<T> out(base_dim, T(0.0));
    for (int a = 0; a < base_dim; ++a) {
      for (int i = 0; i < total_dim; ++i) out[a] += j(i, a) * l[i];
      out[a] = out[a] / fx;
    }
    return out;
  });
  eta.restrict_depth(std::min({lam.max_depth(), jsec.max_depth(),
                               sec.max_depth(), f.max_depth()}));
  ScalarField h;
  if (sys.hamiltonian) h = hom_to_section(sys.hamiltonian, b);
  return ContactFormSystem{b.quotient.base, eta, h};
}

JacobiSystem reduce_poisson_by_scaling(const PoissonSystem& sys,
                                       const ScalingBundle& b) {
  auto pi_total = sys.pi;
  auto sec = b.quotient.section;
  auto jp = jacobian(b.quotient.project);
  auto f = b.scale;
  auto df = differential(f);

  BivectorField pi_red([pi_total, sec, jp, f](const auto& y) {
    auto x = sec(y);
    auto j = jp(x);
    auto scaled = j * pi_total(x) * j.transposed();
    for (int i = 0; i < scaled.rows(); ++i)
      for (int k = 0; k < scaled.cols(); ++k)
        scaled(i, k) = kReducedBracketSign * f(x) * scaled(i, k);
    return scaled;
  });
  pi_red.restrict_depth(std::min({pi_total.max_depth(), sec.max_depth(),
                                  jp.max_depth(), f.max_depth()}));

  // E^i(y) = {F, p_i}(sigma(y)) = -(Jp Pi dF)(sigma(y)).
  VectorField e_red(
      [pi_total, sec, jp, df](const auto& y) {
        auto x = sec(y);
        auto xf = pi_total(x) * df(x);  // Hamiltonian field of F
        auto pushed = jp(x) * xf;
        for (auto& v : pushed) v = -kReducedBracketSign * v;
        return pushed;
      },
      b.quotient.base.dim(), b.quotient.base.dim());
  e_red.restrict_depth(std::min({pi_total.max_depth(), sec.max_depth(),
                                 jp.max_depth(), df.max_depth()}));

  ScalarField h;
  if (sys.hamiltonian) h = hom_to_section(sys.hamiltonian, b);
  return JacobiSystem{b.quotient.base, pi_red, e_red, h};
}

}  // namespace gmred
