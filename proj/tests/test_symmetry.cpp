#include <doctest.h>

#include "gmred/examples/suite.hpp"
#include "gmred/reduction/homogeneous.hpp"
#include "gmred/symmetry/action.hpp"
#include "gmred/symmetry/quotient.hpp"
#include "gmred/symmetry/scaling.hpp"

using namespace gmred;

TEST_CASE("dilation generator of the oscillator scaling") {
  ExampleSuite suite = build_ho();
  const Action& a = suite.pair->scaling.action;
  CHECK(a.kind == GroupKind::RTimes);
  Point x{1.3, 0.7, 0.9, 2.1};
  auto d = generator(a)(x);
  CHECK(d[0] == doctest::Approx(0.65).epsilon(1e-14));
  CHECK(d[1] == doctest::Approx(0.0));
  CHECK(d[2] == doctest::Approx(0.45).epsilon(1e-14));
  CHECK(d[3] == doctest::Approx(0.0));
}

TEST_CASE("scale function homogeneity, finite and infinitesimal") {
  ExampleSuite suite = build_ho();
  const ScalingBundle& b = suite.pair->scaling;
  Point x{1.3, 0.7, 0.9, 2.1};
  CHECK(homogeneity_residual(b, 1.7, x) < 1e-12);
  CHECK(homogeneity_residual(b, 0.4, x) < 1e-12);
  CHECK(euler_residual(b, x) < 1e-12);
  CHECK(hamiltonian_homogeneity_residual(suite.pair->system.hamiltonian, b,
                                         2.3, x) < 1e-12);

  // A function of the wrong degree is flagged loudly: r scales like sqrt(s).
  ScalarField bad([](const auto& y) { return y[0]; });
  CHECK(hamiltonian_homogeneity_residual(bad, b, 4.0, x) > 0.1);
}

TEST_CASE("circle symmetry: invariance, composition, fiber independence") {
  ExampleSuite suite = build_ho();
  const CompatiblePair& cp = *suite.pair;
  Point x{1.3, 0.7, 0.9, 2.1};
  CHECK(cp.standard.kind == GroupKind::Circle);
  CHECK(invariance_residual(cp.standard, cp.system.hamiltonian, 0.9, x) <
        1e-13);
  // Parameters adding past 2*pi still compose thanks to chart wrapping.
  CHECK(composition_residual(cp.standard, cp.system.chart, 2.9, 5.1, x) <
        1e-13);
  CHECK(composition_residual(cp.scaling.action, cp.system.chart, 1.7, 0.3,
                             x) < 1e-13);
  CHECK(fiber_independence_residual(cp.standard_q, cp.standard, 1.2, x) <
        1e-13);
  CHECK(fiber_independence_residual(cp.scaling.quotient, cp.scaling.action,
                                    1.9, x) < 1e-13);
}

TEST_CASE("the two oscillator symmetries commute") {
  ExampleSuite suite = build_ho();
  const Action& scal = suite.pair->scaling.action;
  const Action& circ = suite.pair->standard;
  Point x{1.3, 0.7, 0.9, 2.1};
  Point one = scal.apply(1.7, circ.apply(0.8, x));
  Point two = circ.apply(0.8, scal.apply(1.7, x));
  REQUIRE(one.size() == two.size());
  for (std::size_t i = 0; i < one.size(); ++i)
    CHECK(one[i] == doctest::Approx(two[i]).epsilon(1e-14));
}

TEST_CASE("every quotient section is a genuine section") {
  ExampleSuite suite = build_ho();
  CHECK(section_residual(suite.pair->standard_q, Point{1.1, 0.7, 2.5}) <
        1e-14);
  CHECK(section_residual(suite.pair->scaling.quotient, Point{0.9, 1.3, 4.2}) <
        1e-14);
  CHECK(section_residual(*suite.k_quotient_a, Point{0.8, 2.2}) < 1e-14);
  CHECK(section_residual(*suite.k_quotient_b, Point{0.8, 2.2}) < 1e-14);
  CHECK(section_residual(*suite.rescaled_quotient, Point{1.1, 0.8, 0.9}) <
        1e-14);
}

TEST_CASE("homogeneous functions restrict to the section and extend back") {
  ExampleSuite suite = build_ho();
  const ScalingBundle& b = suite.pair->scaling;
  const ScalarField& ham = suite.pair->system.hamiltonian;
  Point x{1.3, 0.7, 0.9, 2.1};
  CHECK(hom_round_trip_residual(ham, b, x) < 1e-13);

  // Restriction of the energy: (1 + rho'^2)/2 on the base chart.
  ScalarField h = hom_to_section(ham, b);
  Point z{0.8, 0.5, 1.7};
  CHECK(h(z) == doctest::Approx(0.82).epsilon(1e-14));

  // Extending the constant 1 recovers the scale function itself.
  ScalarField ext = section_to_hom(constant_field(1.0), b);
  CHECK(ext(x) == doctest::Approx(b.scale(x)).epsilon(1e-14));
}

TEST_CASE("ray scaling on the coalgebra slab") {
  ExampleSuite suite = build_so3();
  const ScalingBundle& b = suite.poisson_presentations[0].bundle;
  Point mu{0.4, -0.7, 1.1};
  CHECK(homogeneity_residual(b, 2.2, mu) < 1e-13);
  CHECK(euler_residual(b, mu) < 1e-13);
  // The generator of mu -> s mu is the radial field.
  auto d = generator(b.action)(mu);
  CHECK(d[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(d[1] == doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(d[2] == doctest::Approx(1.1).epsilon(1e-14));
  CHECK(section_residual(b.quotient, Point{0.3, -0.9}) < 1e-14);
  CHECK(fiber_independence_residual(b.quotient, b.action, 1.6, mu) < 1e-13);
}
