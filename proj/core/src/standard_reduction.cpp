#include "gmred/reduction/standard.hpp"

#include <algorithm>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

PoissonSystem reduce_symplectic_by_standard(const SymplecticSystem& sys,
                                            [[maybe_unused]] const Action& sym,
                                            const QuotientChart& q) {
  auto pi_total = induced_poisson(sys);
  auto jp = jacobian(q.project);
  auto sec = q.section;
  BivectorField pi_red([pi_total, jp, sec](const auto& y) {
    auto x = sec(y);
    auto j = jp(x);
    return j * pi_total(x) * j.transposed();
  });
  pi_red.restrict_depth(std::min({pi_total.max_depth(), jp.max_depth(),
                                  sec.max_depth()}));
  ScalarField h_red;
  if (sys.hamiltonian) h_red = compose(sys.hamiltonian, sec);
  return PoissonSystem{q.base, pi_red, h_red};
}

JacobiSystem reduce_jacobi_by_standard(const JacobiSystem& sys,
                                       [[maybe_unused]] const Action& sym,
                                       const QuotientChart& q) {
  auto jp = jacobian(q.project);
  auto sec = q.section;
  auto pi_total = sys.pi;
  auto e_total = sys.e;
  BivectorField pi_red([pi_total, jp, sec](const auto& y) {
    auto x = sec(y);
    auto j = jp(x);
    return j * pi_total(x) * j.transposed();
  });
  pi_red.restrict_depth(std::min({pi_total.max_depth(), jp.max_depth(),
                                  sec.max_depth()}));
  VectorField e_red(
      [e_total, jp, sec](const auto& y) {
        auto x = sec(y);
        return jp(x) * e_total(x);
      },
      q.base.dim(), q.base.dim());
  e_red.restrict_depth(std::min({e_total.max_depth(), jp.max_depth(),
                                 sec.max_depth()}));
  ScalarField h_red;
  if (sys.hamiltonian) h_red = compose(sys.hamiltonian, sec);
  return JacobiSystem{q.base, pi_red, e_red, h_red};
}

}  // namespace gmred
