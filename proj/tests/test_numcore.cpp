#include <doctest.h>

#include <cmath>
#include <vector>

#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/dual.hpp"
#include "gmred/numcore/errors.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/numcore/linalg.hpp"
#include "gmred/numcore/rng.hpp"

using namespace gmred;

namespace {

Chart planar_chart() {
  Chart c;
  c.name = "plane";
  c.coords = {"x", "y"};
  c.angle = {false, false};
  c.sample_box = {{-1.0, 1.0}, {-1.0, 1.0}};
  return c;
}

}  // namespace

TEST_CASE("dual numbers: first derivative of composite expressions") {
  const double x = 0.7;
  Dual<double> d(x, 1.0);
  auto f = sin(d) * exp(d);
  CHECK(f.a == doctest::Approx(std::sin(x) * std::exp(x)).epsilon(1e-15));
  CHECK(f.b ==
        doctest::Approx(std::exp(x) * (std::sin(x) + std::cos(x)))
            .epsilon(1e-15));

  auto g = 1.0 / d + 2.0 * d - d / 3.0;
  CHECK(g.b == doctest::Approx(-1.0 / (x * x) + 2.0 - 1.0 / 3.0)
                   .epsilon(1e-15));

  auto h = pow(d, 3.0) + sqrt(d) + log(d) + tan(d);
  CHECK(h.b ==
        doctest::Approx(3.0 * x * x + 0.5 / std::sqrt(x) + 1.0 / x +
                        1.0 / (std::cos(x) * std::cos(x)))
            .epsilon(1e-14));
}

TEST_CASE("dual numbers: nested depths expose exact higher derivatives") {
  const double x = 1.3;
  // Second derivative of x^3 is 6x.
  D2 x2(D1(x, 1.0), D1(1.0, 0.0));
  auto f2 = x2 * x2 * x2;
  CHECK(f2.b.b == doctest::Approx(6.0 * x).epsilon(1e-15));

  // Second derivative of sin is -sin.
  auto s2 = sin(x2);
  CHECK(s2.b.b == doctest::Approx(-std::sin(x)).epsilon(1e-15));

  // Third derivative of x^4 is 24x.
  D3 x3(D2(D1(x, 1.0), D1(1.0, 0.0)), D2(D1(1.0, 0.0), D1(0.0, 0.0)));
  auto f3 = x3 * x3 * x3 * x3;
  CHECK(f3.b.b.b == doctest::Approx(24.0 * x).epsilon(1e-15));
}

TEST_CASE("dual numbers: mixed partial via two seed channels") {
  // f(x, y) = x^2 y, d2f/dxdy = 2x.
  const double x = 0.9, y = -1.4;
  D2 xx(D1(x, 1.0), D1(0.0, 0.0));  // derivative channel 1: d/dx
  D2 yy(D1(y, 0.0), D1(1.0, 0.0));  // derivative channel 2: d/dy
  auto f = xx * xx * yy;
  CHECK(f.b.b == doctest::Approx(2.0 * x).epsilon(1e-15));
}

TEST_CASE("recursive value() reaches the innermost scalar") {
  D2 v(D1(4.25, 1.0), D1(1.0, 0.0));
  CHECK(value(v) == 4.25);
  CHECK(value(3.5) == 3.5);
}

TEST_CASE("fields reject evaluation beyond their derivative depth") {
  ScalarField f([](const auto& x) { return x[0] * x[0]; });
  CHECK(f.max_depth() == 3);

  ScalarField exhausted = f;
  exhausted.restrict_depth(0);
  OneFormField df = differential(exhausted);
  CHECK_THROWS_AS(df(Point{1.0}), UsageError);

  ScalarField empty;
  CHECK_THROWS_AS(empty(Point{1.0}), UsageError);
  CHECK_FALSE(static_cast<bool>(empty));
}

TEST_CASE("differential and jacobian") {
  ScalarField f([](const auto& p) { return p[0] * p[0] * p[1]; });
  auto df = differential(f)(Point{2.0, 3.0});
  CHECK(df[0] == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(df[1] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(differential(f).operator()(Point{2.0, 3.0}).size() == 2);

  CoordMap polar(
      [](const auto& p) {
        using std::cos;
        using std::sin;
        return std::vector{p[0] * cos(p[1]), p[0] * sin(p[1])};
      },
      2, 2);
  auto j = jacobian(polar)(Point{2.0, 0.5});
  CHECK(j(0, 0) == doctest::Approx(std::cos(0.5)).epsilon(1e-15));
  CHECK(j(0, 1) == doctest::Approx(-2.0 * std::sin(0.5)).epsilon(1e-15));
  CHECK(j(1, 0) == doctest::Approx(std::sin(0.5)).epsilon(1e-15));
  CHECK(j(1, 1) == doctest::Approx(2.0 * std::cos(0.5)).epsilon(1e-15));
}

TEST_CASE("lie bracket of coordinate fields") {
  // [x d/dy, d/dx] = -d/dy.
  VectorField a([](const auto& p) {
    using T = std::decay_t<decltype(p[0])>;
    return std::vector<T>{T(0.0), p[0]};
  },
                2, 2);
  VectorField b([](const auto& p) {
    using T = std::decay_t<decltype(p[0])>;
    (void)p;
    return std::vector<T>{T(1.0), T(0.0)};
  },
                2, 2);
  auto br = lie_bracket(a, b)(Point{0.3, -0.8});
  CHECK(br[0] == doctest::Approx(0.0));
  CHECK(br[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("exterior derivative and closedness") {
  // eta = -y dx has d(eta) with A_xy = d_x(eta_y) - d_y(eta_x) = 1.
  OneFormField eta([](const auto& p) {
    using T = std::decay_t<decltype(p[0])>;
    return std::vector<T>{T(0.0) - p[1], T(0.0)};
  });
  auto a = exterior_derivative(eta)(Point{0.4, 1.1});
  CHECK(a(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a(1, 0) == doctest::Approx(-1.0).epsilon(1e-15));

  // d o d = 0: the exterior derivative of any one-form differential is
  // closed, and so is the derivative of a generic one-form in 3d.
  OneFormField generic([](const auto& p) {
    using std::cos;
    using std::sin;
    return std::vector{p[0] * p[1], sin(p[2]) * p[0], cos(p[0]) + p[1] * p[2]};
  });
  TwoFormField da = exterior_derivative(generic);
  CHECK(closedness_residual(da, Point{0.2, -0.7, 1.3}) < 1e-14);
}

TEST_CASE("lu solve and inverse") {
  Mat<double> a(3, 3);
  a(0, 0) = 2;  a(0, 1) = 1;  a(0, 2) = -1;
  a(1, 0) = -3; a(1, 1) = -1; a(1, 2) = 2;
  a(2, 0) = -2; a(2, 1) = 1;  a(2, 2) = 2;
  std::vector<double> rhs{8, -11, -3};
  auto x = lu_solve(a, rhs);
  CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-13));

  auto inv = lu_inverse(a);
  auto id = a * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(id(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));

  Mat<double> sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 2;
  sing(1, 0) = 2; sing(1, 1) = 4;
  CHECK_THROWS_AS(lu_solve(sing, std::vector<double>{1, 1}), DegeneracyError);
}

TEST_CASE("chart wrap and distance") {
  Chart c;
  c.name = "cyl";
  c.coords = {"theta", "z"};
  c.angle = {true, false};
  Point p{-0.1, 2.0};
  c.wrap(p);
  CHECK(p[0] == doctest::Approx(6.183185307179586).epsilon(1e-15));
  CHECK(p[1] == 2.0);

  // Angles 0 and 2*pi - eps are close in chord distance.
  CHECK(c.distance({1e-9, 0.0}, {6.283185306179586, 0.0}) < 1e-8);
  CHECK(c.distance({0.0, 1.0}, {0.0, 3.5}) == doctest::Approx(2.5));
}

TEST_CASE("sampler determinism and domain rejection") {
  Chart c = planar_chart();
  c.domain_check = [](const Point& p) { return p[0] > 0.0; };

  Sampler a(1234), b(1234);
  for (int i = 0; i < 20; ++i) {
    Point pa = a.sample(c), pb = b.sample(c);
    CHECK(pa == pb);
    CHECK(pa[0] > 0.0);
  }

  Chart never = planar_chart();
  never.domain_check = [](const Point&) { return false; };
  Sampler s(7);
  CHECK_THROWS_AS(s.sample(never), DomainError);
}

TEST_CASE("bivector wrapper antisymmetrizes") {
  BivectorField pi([](const auto& p) {
    using T = std::decay_t<decltype(p[0])>;
    Mat<T> m(2, 2);
    m(0, 1) = p[0];  // populate one triangle only
    return m;
  });
  auto m = pi(Point{3.0, 0.0});
  CHECK(m(0, 1) == doctest::Approx(1.5));
  CHECK(m(1, 0) == doctest::Approx(-1.5));
  CHECK(m(0, 0) == 0.0);
}
