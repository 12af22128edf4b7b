#include <array>

#include "gmred/examples/suite.hpp"
#include "gmred/numcore/calculus.hpp"

namespace gmred {
namespace {

Chart make_mu_chart(const char* name, int positive_axis) {
  Chart c;
  c.name = name;
  c.coords = {"mu1", "mu2", "mu3"};
  c.angle = {false, false, false};
  if (positive_axis >= 0) {
    c.domain_check = [positive_axis](const Point& x) {
      return x[positive_axis] > 0.0;
    };
  }
  c.sample_box = {{-1.5, 1.5}, {-1.5, 1.5}, {-1.5, 1.5}};
  if (positive_axis >= 0) c.sample_box[positive_axis] = {0.5, 1.8};
  return c;
}

Chart make_proj_chart(const char* name, const char* c0, const char* c1) {
  Chart c;
  c.name = name;
  c.coords = {c0, c1};
  c.angle = {false, false};
  c.sample_box = {{-1.2, 1.2}, {-1.2, 1.2}};
  return c;
}

BivectorField lie_poisson_tensor() {
  return BivectorField([](const auto& mu) {
    using T = detail::ElemOf<decltype(mu)>;
    Mat<T> m(3, 3);
    m(0, 1) = -mu[2];
    m(1, 0) = mu[2];
    m(1, 2) = -mu[0];
    m(2, 1) = mu[0];
    m(2, 0) = -mu[1];
    m(0, 2) = mu[1];
    return m;
  });
}

}  // namespace

ExampleSuite build_so3() {
  ExampleSuite suite;
  suite.name = "so3";

  Chart coalg = make_mu_chart("so3-coalgebra", -1);
  Chart slab3 = make_mu_chart("so3-slab3", 2);
  Chart slab1 = make_mu_chart("so3-slab1", 0);
  Chart proj3 = make_proj_chart("so3-proj3", "r1", "r2");
  Chart proj1 = make_proj_chart("so3-proj1", "s2", "s3");

  // --- linear bracket on the coalgebra ----------------------------------
  BivectorField pi_mu = lie_poisson_tensor();
  ScalarField h_mu([](const auto& mu) { return mu[2]; });
  suite.lie_poisson = PoissonSystem{coalg, pi_mu, h_mu};
  suite.casimir = ScalarField([](const auto& mu) {
    return mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2];
  });
  suite.total_field_closed = VectorField(
      [](const auto& mu) {
        using T = detail::ElemOf<decltype(mu)>;
        return Pt<T>{mu[1], -mu[0], T(0.0)};
      },
      3, 3);

  // --- the two projective charts with their scaling bundles -------------
  CoordMap ray_act(
      [](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        return Pt<T>{in[0] * in[1], in[0] * in[2], in[0] * in[3]};
      },
      4, 3);

  CoordMap p3(
      [](const auto& mu) {
        using T = detail::ElemOf<decltype(mu)>;
        return Pt<T>{mu[0] / mu[2], mu[1] / mu[2]};
      },
      3, 2);
  CoordMap sec3(
      [](const auto& r) {
        using T = detail::ElemOf<decltype(r)>;
        return Pt<T>{r[0], r[1], T(1.0)};
      },
      2, 3);
  ScalarField f3([](const auto& mu) { return mu[2]; });

  CoordMap p1(
      [](const auto& mu) {
        using T = detail::ElemOf<decltype(mu)>;
        return Pt<T>{mu[1] / mu[0], mu[2] / mu[0]};
      },
      3, 2);
  CoordMap sec1(
      [](const auto& s) {
        using T = detail::ElemOf<decltype(s)>;
        return Pt<T>{T(1.0), s[0], s[1]};
      },
      2, 3);
  ScalarField f1([](const auto& mu) { return mu[0]; });

  ScalingBundle bundle3{QuotientChart{slab3, proj3, p3, sec3},
                        Action{GroupKind::RTimes, ray_act}, f3};
  ScalingBundle bundle1{QuotientChart{slab1, proj1, p1, sec1},
                        Action{GroupKind::RTimes, ray_act}, f1};

  // --- chart-local bracket data ------------------------------------------
  BivectorField pi_r([](const auto& r) {
    using T = detail::ElemOf<decltype(r)>;
    Mat<T> m(2, 2);
    auto w = 1.0 + r[0] * r[0] + r[1] * r[1];
    m(0, 1) = -w;
    m(1, 0) = w;
    return m;
  });
  VectorField e_r(
      [](const auto& r) {
        using T = detail::ElemOf<decltype(r)>;
        return Pt<T>{-r[1], r[0]};
      },
      2, 2);
  ScalarField h_r = constant_field(1.0);  // default Hamiltonian mu3 here

  BivectorField pi_s([](const auto& s) {
    using T = detail::ElemOf<decltype(s)>;
    Mat<T> m(2, 2);
    auto w = 1.0 + s[0] * s[0] + s[1] * s[1];
    m(0, 1) = -w;
    m(1, 0) = w;
    return m;
  });
  VectorField e_s(
      [](const auto& s) {
        using T = detail::ElemOf<decltype(s)>;
        return Pt<T>{-s[1], s[0]};
      },
      2, 2);
  ScalarField h_s([](const auto& s) { return s[1]; });

  JacobiSystem chart3{proj3, pi_r, e_r, h_r};
  JacobiSystem chart1{proj1, pi_s, e_s, h_s};
  suite.jacobi_charts.push_back({"projective-3", chart3});
  suite.jacobi_charts.push_back({"projective-1", chart1});
  suite.reduced_a_index = 0;
  suite.reduced_b_index = 1;

  suite.poisson_presentations.push_back(
      {"projective-3", PoissonSystem{slab3, pi_mu, h_mu}, bundle3, 0});
  suite.poisson_presentations.push_back(
      {"projective-1", PoissonSystem{slab1, pi_mu, h_mu}, bundle1, 1});

  // --- atlas gluing -------------------------------------------------------
  CoordMap phi31(
      [](const auto& r) {
        using T = detail::ElemOf<decltype(r)>;
        return Pt<T>{r[1] / r[0], 1.0 / r[0]};
      },
      2, 2);
  ScalarField a31([](const auto& r) { return r[0]; });
  CoordMap phi13(
      [](const auto& s) {
        using T = detail::ElemOf<decltype(s)>;
        return Pt<T>{1.0 / s[1], s[0] / s[1]};
      },
      2, 2);
  ScalarField a13([](const auto& s) { return s[1]; });

  KirillovAtlas atlas;
  atlas.charts = {chart3, chart1};
  atlas.transitions.push_back(
      {0, 1, phi31, a31, {{0.4, 1.6}, {-1.2, 1.2}}});
  atlas.transitions.push_back(
      {1, 0, phi13, a13, {{-1.2, 1.2}, {0.4, 1.6}}});
  suite.atlas = std::move(atlas);

  suite.lie_bracket_coeffs = [](const std::array<double, 3>& a,
                                const std::array<double, 3>& b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1],
                                 a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
  };
  suite.lie_section_locals = [](const std::array<double, 3>& xi) {
    ScalarField h3([xi](const auto& r) {
      return xi[0] * r[0] + xi[1] * r[1] + xi[2];
    });
    ScalarField h1([xi](const auto& s) {
      return xi[0] + xi[1] * s[0] + xi[2] * s[1];
    });
    return std::vector<ScalarField>{h3, h1};
  };
  suite.lie_symbol_closed = [](int chart, const std::array<double, 3>& xi) {
    if (chart == 0) {
      return VectorField(
          [xi](const auto& r) {
            using T = detail::ElemOf<decltype(r)>;
            auto w = 1.0 + r[0] * r[0] + r[1] * r[1];
            auto h = xi[0] * r[0] + xi[1] * r[1] + xi[2];
            return Pt<T>{-w * xi[1] + h * r[1], w * xi[0] - h * r[0]};
          },
          2, 2);
    }
    if (chart == 1) {
      return VectorField(
          [xi](const auto& s) {
            using T = detail::ElemOf<decltype(s)>;
            auto w = 1.0 + s[0] * s[0] + s[1] * s[1];
            auto h = xi[0] + xi[1] * s[0] + xi[2] * s[1];
            return Pt<T>{-w * xi[2] + h * s[1], w * xi[1] - h * s[0]};
          },
          2, 2);
    }
    throw UsageError("so3 symbol: chart index must be 0 or 1");
  };

  // --- tool defaults ------------------------------------------------------
  suite.default_x0 = {0.3, 0.4, 1.2};
  suite.default_k0 = p3(suite.default_x0);
  suite.default_t0 = 0.0;
  suite.default_t1 = 1.0;
  suite.default_dt = 1e-3;

  {
    ReconstructionPreset pre;
    pre.label = "third-axis-trivialization";
    pre.bundle = bundle3;
    pre.full_field = *suite.total_field_closed;
    pre.reduced_field = suite.lie_symbol_closed(0, {0.0, 0.0, 1.0});
    pre.alpha = ReconstructionPreset::Alpha::EDrift;
    pre.drift = e_r;
    pre.reduced_h = h_r;
    suite.reconstructions.push_back(std::move(pre));
  }

  return suite;
}

}  // namespace gmred
