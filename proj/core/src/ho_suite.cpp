#include <cmath>

#include "gmred/examples/suite.hpp"
#include "gmred/numcore/calculus.hpp"

namespace gmred {
namespace {

using std::cos;
using std::sin;
using std::sqrt;

constexpr double kTwoPi = 6.283185307179586476925286766559;

Chart make_total_chart() {
  Chart c;
  c.name = "ho-total";
  c.coords = {"r", "theta", "r_prime", "theta_prime"};
  c.angle = {false, true, false, true};
  c.domain_check = [](const Point& x) { return x[0] > 0.0 && x[2] > 0.0; };
  c.sample_box = {{0.6, 1.6}, {0.0, kTwoPi}, {0.6, 1.6}, {0.0, kTwoPi}};
  return c;
}

Chart make_quotient_chart() {
  Chart c;
  c.name = "ho-quotient";
  c.coords = {"r", "r_prime", "alpha"};
  c.angle = {false, false, true};
  c.domain_check = [](const Point& x) { return x[0] > 0.0 && x[1] > 0.0; };
  c.sample_box = {{0.6, 1.6}, {0.6, 1.6}, {0.0, kTwoPi}};
  return c;
}

Chart make_rescaled_chart() {
  Chart c;
  c.name = "ho-rescaled";
  c.coords = {"rho", "rho_prime", "sigma"};
  c.angle = {false, false, true};
  c.domain_check = [](const Point& x) { return x[0] > 0.0 && x[1] > 0.0; };
  c.sample_box = {{0.6, 1.6}, {0.5, 1.8}, {0.0, kTwoPi}};
  return c;
}

Chart make_contact_chart() {
  Chart c;
  c.name = "ho-contact";
  c.coords = {"rho_prime", "theta", "theta_prime"};
  c.angle = {false, true, true};
  c.domain_check = [](const Point& x) { return x[0] > 0.0; };
  c.sample_box = {{0.5, 1.8}, {0.0, kTwoPi}, {0.0, kTwoPi}};
  return c;
}

Chart make_reduced_chart() {
  Chart c;
  c.name = "ho-reduced";
  c.coords = {"rho_prime", "sigma"};
  c.angle = {false, true};
  c.domain_check = [](const Point& x) { return x[0] > 0.0; };
  c.sample_box = {{0.5, 1.8}, {0.0, kTwoPi}};
  return c;
}

}  // namespace

ExampleSuite build_ho() {
  ExampleSuite suite;
  suite.name = "ho";

  Chart total = make_total_chart();
  Chart pchart = make_quotient_chart();
  Chart p2chart = make_rescaled_chart();
  Chart cchart = make_contact_chart();
  Chart kchart = make_reduced_chart();

  // --- total chart: symplectic form, Hamiltonian, dynamics -------------
  // Polar coordinates r (configuration radius), r' (velocity magnitude)
  // with their angles; alpha = theta - theta' is the only angle the
  // structure depends on.
  TwoFormField omega([](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    auto a = x[1] - x[3];
    auto c = cos(a);
    auto s = sin(a);
    Mat<T> w(4, 4);
    w(0, 2) = -c;
    w(2, 0) = c;
    w(0, 3) = -x[2] * s;
    w(3, 0) = x[2] * s;
    w(1, 2) = x[0] * s;
    w(2, 1) = -x[0] * s;
    w(1, 3) = -x[0] * x[2] * c;
    w(3, 1) = x[0] * x[2] * c;
    return w;
  });

  ScalarField hamiltonian(
      [](const auto& x) { return (x[0] * x[0] + x[2] * x[2]) * 0.5; });

  suite.total_field_closed = VectorField(
      [](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        auto a = x[1] - x[3];
        auto c = cos(a);
        auto s = sin(a);
        return Pt<T>{-x[2] * c, (x[2] / x[0]) * s, x[0] * c,
                     (x[0] / x[2]) * s};
      },
      4, 4);

  // --- the two commuting symmetries ------------------------------------
  // Scaling: dilation of both radii by sqrt(s); F = r^2 is its degree-one
  // homogeneous scale function.
  CoordMap scal_map(
      [](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        auto u = sqrt(in[0]);
        return Pt<T>{u * in[1], in[2], u * in[3], in[4]};
      },
      5, 4);
  ScalarField scale_fn([](const auto& x) { return x[0] * x[0]; });

  // Ordinary symmetry: the diagonal circle action on both angles.
  CoordMap circ_map(
      [](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        return Pt<T>{in[1], in[2] + in[0], in[3], in[4] + in[0]};
      },
      5, 4);

  // --- quotient chart presentations ------------------------------------
  CoordMap p_std(
      [](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        return Pt<T>{x[0], x[2], x[1] - x[3]};
      },
      4, 3);
  CoordMap sec_std(
      [](const auto& y) {
        using T = detail::ElemOf<decltype(y)>;
        return Pt<T>{y[0], y[2], y[1], T(0.0)};
      },
      3, 4);

  CoordMap p_resc(
      [](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        return Pt<T>{x[0], x[2] / x[0], x[1] - x[3]};
      },
      4, 3);
  CoordMap sec_resc(
      [](const auto& y) {
        using T = detail::ElemOf<decltype(y)>;
        return Pt<T>{y[0], y[2], y[0] * y[1], T(0.0)};
      },
      3, 4);

  CoordMap p_scal(
      [](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        return Pt<T>{x[2] / x[0], x[1], x[3]};
      },
      4, 3);
  CoordMap sec_scal(
      [](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        return Pt<T>{T(1.0), z[1], z[0], z[2]};
      },
      3, 4);

  CoordMap p_ka(
      [](const auto& y) {
        using T = detail::ElemOf<decltype(y)>;
        return Pt<T>{y[1] / y[0], y[2]};
      },
      3, 2);
  CoordMap sec_ka(
      [](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        return Pt<T>{T(1.0), k[0], k[1]};
      },
      2, 3);

  CoordMap p_kb(
      [](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        return Pt<T>{z[0], z[1] - z[2]};
      },
      3, 2);
  CoordMap sec_kb(
      [](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        return Pt<T>{k[0], k[1], T(0.0)};
      },
      2, 3);

  CompatiblePair cp;
  cp.system = SymplecticSystem{total, omega, hamiltonian};
  cp.scaling = ScalingBundle{QuotientChart{total, cchart, p_scal, sec_scal},
                             Action{GroupKind::RTimes, scal_map}, scale_fn};
  cp.standard = Action{GroupKind::Circle, circ_map};
  cp.standard_q = QuotientChart{total, pchart, p_std, sec_std};
  suite.pair = cp;
  suite.k_quotient_a = QuotientChart{pchart, kchart, p_ka, sec_ka};
  suite.k_quotient_b = QuotientChart{cchart, kchart, p_kb, sec_kb};
  suite.rescaled_quotient = QuotientChart{total, p2chart, p_resc, sec_resc};

  // --- reference objects on the ordinary quotient P --------------------
  BivectorField pi_p([](const auto& y) {
    using T = detail::ElemOf<decltype(y)>;
    auto c = cos(y[2]);
    auto s = sin(y[2]);
    Mat<T> m(3, 3);
    m(0, 1) = -c;
    m(1, 0) = c;
    m(0, 2) = s / y[1];
    m(2, 0) = -s / y[1];
    m(1, 2) = -s / y[0];
    m(2, 1) = s / y[0];
    return m;
  });
  ScalarField h_p(
      [](const auto& y) { return (y[0] * y[0] + y[1] * y[1]) * 0.5; });
  suite.quotient_poisson_closed = PoissonSystem{pchart, pi_p, h_p};

  BivectorField pi_p2([](const auto& y) {
    using T = detail::ElemOf<decltype(y)>;
    auto c = cos(y[2]);
    auto s = sin(y[2]);
    Mat<T> m(3, 3);
    m(0, 1) = -c / y[0];
    m(1, 0) = c / y[0];
    m(0, 2) = s / (y[0] * y[1]);
    m(2, 0) = -s / (y[0] * y[1]);
    m(1, 2) = -2.0 * s / (y[0] * y[0]);
    m(2, 1) = 2.0 * s / (y[0] * y[0]);
    return m;
  });
  ScalarField h_p2([](const auto& y) {
    return y[0] * y[0] * (1.0 + y[1] * y[1]) * 0.5;
  });
  suite.rescaled_poisson_closed = PoissonSystem{p2chart, pi_p2, h_p2};

  // --- reference objects on the scaling quotient C ---------------------
  OneFormField eta_c([](const auto& z) {
    using T = detail::ElemOf<decltype(z)>;
    auto a = z[1] - z[2];
    auto c = cos(a);
    auto s = sin(a);
    return Pt<T>{c * 0.5, z[0] * s * 0.5, z[0] * s * 0.5};
  });
  ScalarField h_c([](const auto& z) { return (1.0 + z[0] * z[0]) * 0.5; });
  suite.contact_closed = ContactFormSystem{cchart, eta_c, h_c};

  suite.reeb_closed = VectorField(
      [](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        auto a = z[1] - z[2];
        return Pt<T>{2.0 * cos(a), T(0.0), 2.0 * sin(a) / z[0]};
      },
      3, 3);

  suite.contact_field_closed = VectorField(
      [](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        auto a = z[1] - z[2];
        auto c = cos(a);
        auto s = sin(a);
        return Pt<T>{(1.0 + z[0] * z[0]) * c, z[0] * s, s / z[0]};
      },
      3, 3);

  BivectorField pi_jc([](const auto& z) {
    using T = detail::ElemOf<decltype(z)>;
    auto a = z[1] - z[2];
    auto c = cos(a);
    auto s = sin(a);
    Mat<T> m(3, 3);
    m(0, 1) = -s;
    m(1, 0) = s;
    m(0, 2) = s;
    m(2, 0) = -s;
    m(1, 2) = -c / z[0];
    m(2, 1) = c / z[0];
    return m;
  });
  VectorField e_jc(
      [](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        auto a = z[1] - z[2];
        return Pt<T>{-2.0 * cos(a), T(0.0), -2.0 * sin(a) / z[0]};
      },
      3, 3);

  // --- reference objects on the final chart K --------------------------
  BivectorField pi_k([](const auto& k) {
    using T = detail::ElemOf<decltype(k)>;
    Mat<T> m(2, 2);
    m(0, 1) = -2.0 * sin(k[1]);
    m(1, 0) = 2.0 * sin(k[1]);
    return m;
  });
  VectorField e_k(
      [](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        return Pt<T>{-2.0 * cos(k[1]), 2.0 * sin(k[1]) / k[0]};
      },
      2, 2);
  ScalarField h_k([](const auto& k) { return (1.0 + k[0] * k[0]) * 0.5; });

  suite.jacobi_charts.push_back(
      {"contact-induced", JacobiSystem{cchart, pi_jc, e_jc, h_c}});
  suite.jacobi_charts.push_back(
      {"reduced-A", JacobiSystem{kchart, pi_k, e_k, h_k}});
  suite.jacobi_charts.push_back(
      {"reduced-B", JacobiSystem{kchart, pi_k, e_k, h_k}});
  suite.contact_jacobi_index = 0;
  suite.reduced_a_index = 1;
  suite.reduced_b_index = 2;

  suite.reduced_field_closed = VectorField(
      [](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        auto c = cos(k[1]);
        auto s = sin(k[1]);
        return Pt<T>{(1.0 + k[0] * k[0]) * c,
                     (k[0] * k[0] - 1.0) / k[0] * s};
      },
      2, 2);

  // --- Poisson presentation in scaling-adapted coordinates -------------
  {
    CoordMap act_p2(
        [](const auto& in) {
          using T = detail::ElemOf<decltype(in)>;
          return Pt<T>{sqrt(in[0]) * in[1], in[2], in[3]};
        },
        4, 3);
    ScalarField f_p2([](const auto& y) { return y[0] * y[0]; });
    CoordMap p_p2k(
        [](const auto& y) {
          using T = detail::ElemOf<decltype(y)>;
          return Pt<T>{y[1], y[2]};
        },
        3, 2);
    CoordMap sec_p2k(
        [](const auto& k) {
          using T = detail::ElemOf<decltype(k)>;
          return Pt<T>{T(1.0), k[0], k[1]};
        },
        2, 3);
    PoissonPresentation pres;
    pres.label = "scaled-coordinates";
    pres.system = *suite.rescaled_poisson_closed;
    pres.bundle = ScalingBundle{QuotientChart{p2chart, kchart, p_p2k, sec_p2k},
                                Action{GroupKind::RTimes, act_p2}, f_p2};
    pres.reduces_to = suite.reduced_a_index;
    suite.poisson_presentations.push_back(std::move(pres));
  }

  // --- tool defaults ----------------------------------------------------
  suite.default_x0 = {1.2, 0.3, 0.8, 1.9};
  suite.default_k0 = p_ka(p_std(suite.default_x0));
  kchart.wrap(suite.default_k0);
  suite.default_t0 = 0.0;
  suite.default_t1 = 1.0;
  suite.default_dt = 1e-3;

  // Trivialization by the energy itself: the fiber quadrature integrand
  // {F, H} vanishes identically, so the lift is already the trajectory.
  {
    ReconstructionPreset pre;
    pre.label = "energy-trivialization";
    pre.bundle = ScalingBundle{cp.scaling.quotient, cp.scaling.action,
                               hamiltonian};
    pre.full_field = *suite.total_field_closed;
    pre.reduced_field = *suite.contact_field_closed;
    pre.alpha = ReconstructionPreset::Alpha::BracketIntegrand;
    pre.integrand = symplectic_bracket(cp.system, hamiltonian, hamiltonian);
    suite.reconstructions.push_back(std::move(pre));
  }
  // Trivialization by the configuration radius squared; the fiber factor
  // is recovered from the Reeb drift of the reduced Hamiltonian.
  {
    ReconstructionPreset pre;
    pre.label = "radius-trivialization";
    pre.bundle = cp.scaling;
    pre.full_field = *suite.total_field_closed;
    pre.reduced_field = *suite.contact_field_closed;
    pre.alpha = ReconstructionPreset::Alpha::ReebDrift;
    pre.drift = *suite.reeb_closed;
    pre.reduced_h = h_c;
    suite.reconstructions.push_back(std::move(pre));
  }

  return suite;
}

}  // namespace gmred
