#include <doctest.h>

#include <cmath>
#include <vector>

#include "gmred/examples/suite.hpp"
#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/errors.hpp"
#include "gmred/structures/contact.hpp"
#include "gmred/structures/jacobi.hpp"
#include "gmred/structures/kirillov.hpp"
#include "gmred/structures/poisson.hpp"
#include "gmred/structures/symplectic.hpp"

using namespace gmred;

namespace {

Chart canonical_chart() {
  Chart c;
  c.name = "qp";
  c.coords = {"q", "p"};
  c.angle = {false, false};
  c.sample_box = {{-2.0, 2.0}, {-2.0, 2.0}};
  return c;
}

SymplecticSystem canonical(ScalarField h) {
  TwoFormField w([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    (void)x;
    Mat<T> m(2, 2);
    m(0, 1) = T(1.0);
    m(1, 0) = T(-1.0);
    return m;
  });
  return SymplecticSystem{canonical_chart(), w, std::move(h)};
}

}  // namespace

TEST_CASE("orientation anchors on the canonical chart") {
  // H = p generates d/dq.
  auto sys = canonical(ScalarField([](const auto& x) { return x[1]; }));
  auto x = symplectic_hvf(sys)(Point{0.3, -1.2});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(0.0));

  // Planar oscillator: at (1, 0) the flow heads toward (0, -1).
  auto osc = canonical(ScalarField(
      [](const auto& x) { return (x[0] * x[0] + x[1] * x[1]) / 2.0; }));
  auto v = symplectic_hvf(osc)(Point{1.0, 0.0});
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(-1.0).epsilon(1e-14));

  // Induced bivector realizes {q, p} = +1.
  PoissonSystem ps = as_poisson(osc);
  ScalarField q([](const auto& x) { return x[0]; });
  ScalarField p([](const auto& x) { return x[1]; });
  CHECK(poisson_bracket(ps, q, p)(Point{0.7, 0.4}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Antisymmetrized evaluation makes {f, f} exactly zero.
  CHECK(poisson_bracket(ps, q, q)(Point{0.7, 0.4}) == 0.0);
}

TEST_CASE("hamiltonian field convention X_H(f) = {f, H}") {
  auto osc = canonical(ScalarField(
      [](const auto& x) { return (x[0] * x[0] + x[1] * x[1]) / 2.0; }));
  PoissonSystem ps = as_poisson(osc);
  ScalarField f([](const auto& x) { return x[0] * x[1] * x[1]; });
  Point pt{0.8, -0.6};
  auto xh = poisson_hvf(ps)(pt);
  auto df = differential(f)(pt);
  double lhs = xh[0] * df[0] + xh[1] * df[1];
  double rhs = poisson_bracket(ps, f, ps.hamiltonian)(pt);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("symplectic solve agrees with the coded oscillator field") {
  ExampleSuite suite = build_ho();
  Point pt{1.2, 0.5, 0.8, 2.9};
  auto solved = symplectic_hvf(suite.pair->system)(pt);
  // Closed form at alpha = theta - theta' = -2.4.
  CHECK(solved[0] == doctest::Approx(0.5899149724329964).epsilon(1e-12));
  CHECK(solved[1] == doctest::Approx(-0.45030878703410071).epsilon(1e-12));
  CHECK(solved[2] == doctest::Approx(-0.88487245864949449).epsilon(1e-12));
  CHECK(solved[3] == doctest::Approx(-1.0131947708267264).epsilon(1e-12));
  auto coded = (*suite.total_field_closed)(pt);
  for (int i = 0; i < 4; ++i)
    CHECK(solved[i] == doctest::Approx(coded[i]).epsilon(1e-12));
}

TEST_CASE("contact data of the oscillator quotient at a pinned point") {
  ExampleSuite suite = build_ho();
  const ContactFormSystem& c = *suite.contact_closed;
  Point z{0.8, 0.5, 1.7};  // alpha = -1.2

  auto eta = c.eta(z);
  CHECK(eta[0] == doctest::Approx(0.18117887723833681).epsilon(1e-14));
  CHECK(eta[1] == doctest::Approx(-0.37281563438689053).epsilon(1e-14));
  CHECK(eta[2] == doctest::Approx(-0.37281563438689053).epsilon(1e-14));

  auto reeb = reeb_field(c)(z);
  CHECK(reeb[0] == doctest::Approx(0.72471550895334724).epsilon(1e-12));
  CHECK(reeb[1] == doctest::Approx(0.0));
  CHECK(reeb[2] == doctest::Approx(-2.3300977149180655).epsilon(1e-12));
  CHECK(contact_axiom_residual(c, z) < 1e-12);

  auto xh = contact_hvf(c)(z);
  CHECK(xh[0] == doctest::Approx(0.59426671734174497).epsilon(1e-12));
  CHECK(xh[1] == doctest::Approx(-0.74563126877378105).epsilon(1e-12));
  CHECK(xh[2] == doctest::Approx(-1.1650488574590332).epsilon(1e-12));
  CHECK(contact_solve_residual(c, c.hamiltonian, z) < 1e-12);

  // Unit Hamiltonian reproduces the Reeb field.
  auto unit = contact_hvf(c, constant_field(1.0))(z);
  for (int i = 0; i < 3; ++i)
    CHECK(unit[i] == doctest::Approx(reeb[i]).epsilon(1e-12));

  // Induced first-order bracket data: Pi entries and E = -R.
  JacobiSystem jc = jacobi_from_contact(c);
  auto pi = jc.pi(z);
  CHECK(pi(0, 1) == doctest::Approx(0.93203908596722629).epsilon(1e-10));
  CHECK(pi(0, 2) == doctest::Approx(-0.93203908596722629).epsilon(1e-10));
  CHECK(pi(1, 2) == doctest::Approx(-0.45294719309584208).epsilon(1e-10));
  auto e = jc.e(z);
  for (int i = 0; i < 3; ++i)
    CHECK(e[i] == doctest::Approx(-reeb[i]).epsilon(1e-10));

  // Its Hamiltonian field coincides with the contact one.
  auto via_jacobi = jacobi_hvf(jc)(z);
  for (int i = 0; i < 3; ++i)
    CHECK(via_jacobi[i] == doctest::Approx(xh[i]).epsilon(1e-10));
}

TEST_CASE("degenerate contact data is rejected") {
  Chart c = canonical_chart();
  // eta = dq on a 2d chart: d(eta) = 0 and eta eta^T is rank one.
  OneFormField eta([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    (void)x;
    return std::vector<T>{T(1.0), T(0.0)};
  });
  ContactFormSystem sys{c, eta, constant_field(1.0)};
  CHECK(contact_condition(sys, Point{0.1, 0.2}) > 1e12);
  CHECK_THROWS_AS(check_contact_nondegenerate(sys, Point{0.1, 0.2}),
                  DegeneracyError);
}

TEST_CASE("jacobi bracket reduces to the poisson bracket when E = 0") {
  ExampleSuite suite = build_so3();
  const PoissonSystem& lp = *suite.lie_poisson;
  JacobiSystem as_jacobi{lp.chart, lp.pi,
                         VectorField(
                             [](const auto& x) {
                               using T = std::decay_t<decltype(x[0])>;
                               return std::vector<T>(x.size(), T(0.0));
                             },
                             3, 3),
                         lp.hamiltonian};
  ScalarField f([](const auto& m) { return m[0] * m[2]; });
  ScalarField g([](const auto& m) { return m[1] + m[2] * m[2]; });
  Point mu{0.4, -0.9, 1.1};
  CHECK(jacobi_bracket(as_jacobi, f, g)(mu) ==
        doctest::Approx(poisson_bracket(lp, f, g)(mu)).epsilon(1e-13));
}

TEST_CASE("lie-poisson anchors on the rotation coalgebra") {
  ExampleSuite suite = build_so3();
  const PoissonSystem& lp = *suite.lie_poisson;
  ScalarField m1([](const auto& m) { return m[0]; });
  ScalarField m2([](const auto& m) { return m[1]; });
  CHECK(poisson_bracket(lp, m1, m2)(Point{0.0, 0.0, 1.0}) ==
        doctest::Approx(-1.0).epsilon(1e-14));

  auto x3 = poisson_hvf(lp)(Point{0.3, 0.4, 1.2});
  CHECK(x3[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(x3[1] == doctest::Approx(-0.3).epsilon(1e-14));
  CHECK(x3[2] == doctest::Approx(0.0));
}

TEST_CASE("projective chart bracket data at a pinned point") {
  ExampleSuite suite = build_so3();
  const JacobiSystem& chart3 = suite.jacobi_charts[0].system;
  Point r{0.6, -1.1};
  auto pi = chart3.pi(r);
  CHECK(pi(0, 1) == doctest::Approx(-2.57).epsilon(1e-14));
  auto e = chart3.e(r);
  CHECK(e[0] == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(e[1] == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("atlas transitions compose to the identity") {
  ExampleSuite suite = build_so3();
  const KirillovAtlas& atlas = *suite.atlas;
  Point r{0.8, -0.5};
  CHECK(cocycle_residual(atlas, 0, 1, r) < 1e-14);
  CHECK(factor_cocycle_residual(atlas, 0, 1, r) < 1e-14);
  const auto& tr = atlas.transition(0, 1);
  auto s = tr.map(r);
  // (r1, r2) -> (r2/r1, 1/r1).
  CHECK(s[0] == doctest::Approx(-0.625).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(tr.factor(r) == doctest::Approx(0.8).epsilon(1e-14));
}
