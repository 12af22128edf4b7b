#pragma once

#include <cmath>
#include <type_traits>
#include <utility>

namespace gmred {

/// Forward-mode dual number carrying one derivative channel.
///
/// Nesting (Dual<Dual<double>>, ...) exposes higher-order mixed partials:
/// seeding distinct channels and reading the fully nested derivative part
/// yields d^k f without truncation error.
template <class T>
struct Dual {
  T a{};  ///< value part
  T b{};  ///< derivative part

  Dual() = default;
  Dual(T value, T deriv) : a(std::move(value)), b(std::move(deriv)) {}

  /// Implicit promotion of a constant (derivative part zero). The extra
  /// arithmetic overload lets a plain double reach any nesting depth.
  Dual(T value) : a(std::move(value)), b{} {}
  template <class U, std::enable_if_t<std::is_arithmetic_v<U> &&
                                          !std::is_same_v<U, T>,
                                      int> = 0>
  Dual(U value) : a(static_cast<T>(value)), b{} {}

  Dual& operator+=(const Dual& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    b = b * o.a + a * o.b;
    a = a * o.a;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    a = a / o.a;
    b = (b - a * o.b) / o.a;
    return *this;
  }
};

template <class T>
Dual<T> operator+(Dual<T> x, const Dual<T>& y) {
  x += y;
  return x;
}
template <class T>
Dual<T> operator-(Dual<T> x, const Dual<T>& y) {
  x -= y;
  return x;
}
template <class T>
Dual<T> operator*(Dual<T> x, const Dual<T>& y) {
  x *= y;
  return x;
}
template <class T>
Dual<T> operator/(Dual<T> x, const Dual<T>& y) {
  x /= y;
  return x;
}
template <class T>
Dual<T> operator-(const Dual<T>& x) {
  return Dual<T>(-x.a, -x.b);
}
template <class T>
Dual<T> operator+(const Dual<T>& x) {
  return x;
}

// Mixed scalar/dual arithmetic (scalar promotes to constant dual).
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator+(const Dual<T>& x, U s) {
  return x + Dual<T>(s);
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator+(U s, const Dual<T>& x) {
  return Dual<T>(s) + x;
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator-(const Dual<T>& x, U s) {
  return x - Dual<T>(s);
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator-(U s, const Dual<T>& x) {
  return Dual<T>(s) - x;
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator*(const Dual<T>& x, U s) {
  return x * Dual<T>(s);
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator*(U s, const Dual<T>& x) {
  return Dual<T>(s) * x;
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator/(const Dual<T>& x, U s) {
  return x / Dual<T>(s);
}
template <class T, class U, std::enable_if_t<std::is_arithmetic_v<U>, int> = 0>
Dual<T> operator/(U s, const Dual<T>& x) {
  return Dual<T>(s) / x;
}

/// Scalar (deepest value) part of a possibly nested dual.
inline double value(double x) { return x; }
template <class T>
double value(const Dual<T>& x) {
  return value(x.a);
}

// Elementary functions, found by ADL.  Inside templated field formulas write
// `using std::sin;` etc. so plain doubles resolve to <cmath>.

template <class T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return Dual<T>(sin(x.a), x.b * cos(x.a));
}
template <class T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return Dual<T>(cos(x.a), -x.b * sin(x.a));
}
template <class T>
Dual<T> tan(const Dual<T>& x) {
  return sin(x) / cos(x);
}
template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  auto s = sqrt(x.a);
  return Dual<T>(s, x.b / (2.0 * s));
}
template <class T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  auto e = exp(x.a);
  return Dual<T>(e, x.b * e);
}
template <class T>
Dual<T> log(const Dual<T>& x) {
  using std::log;
  return Dual<T>(log(x.a), x.b / x.a);
}
template <class T>
Dual<T> pow(const Dual<T>& x, double p) {
  using std::pow;
  return Dual<T>(pow(x.a, p), x.b * (p * pow(x.a, p - 1.0)));
}

using D0 = double;
using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;

}  // namespace gmred
