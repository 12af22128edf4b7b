#pragma once

#include <algorithm>
#include <functional>
#include <type_traits>
#include <vector>

#include "gmred/numcore/dual.hpp"
#include "gmred/numcore/errors.hpp"
#include "gmred/numcore/linalg.hpp"

namespace gmred {

template <class T>
using Pt = std::vector<T>;  ///< chart point / tangent vector components

using Point = Pt<double>;

namespace detail {
struct MultiFunctionTag {};

template <class T>
using ScalarOut = T;
template <class T>
using VectorOut = std::vector<T>;
template <class T>
using MatrixOut = Mat<T>;
}  // namespace detail

/// Type-erased field evaluable at four automatic-differentiation depths
/// (plain double and three nested dual levels).  Constructed from a single
/// generic lambda; each derivative-taking transformation consumes one depth.
template <template <class> class Out>
class MultiFunction : public detail::MultiFunctionTag {
 public:
  MultiFunction() = default;

  template <class F,
            std::enable_if_t<!std::is_base_of_v<detail::MultiFunctionTag,
                                                std::decay_t<F>>,
                             int> = 0>
  MultiFunction(F f, int max_depth = 3)
      : max_depth_(max_depth),
        f0_([f](const Pt<D0>& x) -> Out<D0> { return f(x); }),
        f1_([f](const Pt<D1>& x) -> Out<D1> { return f(x); }),
        f2_([f](const Pt<D2>& x) -> Out<D2> { return f(x); }),
        f3_([f](const Pt<D3>& x) -> Out<D3> { return f(x); }) {}

  template <class T>
  Out<T> operator()(const Pt<T>& x) const {
    if constexpr (std::is_same_v<T, D0>) {
      require(0);
      return f0_(x);
    } else if constexpr (std::is_same_v<T, D1>) {
      require(1);
      return f1_(x);
    } else if constexpr (std::is_same_v<T, D2>) {
      require(2);
      return f2_(x);
    } else if constexpr (std::is_same_v<T, D3>) {
      require(3);
      return f3_(x);
    } else {
      throw UsageError("field evaluated beyond the supported dual depth");
    }
  }

  /// Highest dual depth this field supports (3 for closed-form fields;
  /// one less per derivative taken of it).
  int max_depth() const { return max_depth_; }
  void restrict_depth(int d) { max_depth_ = std::min(max_depth_, d); }

  explicit operator bool() const { return static_cast<bool>(f0_); }

 private:
  void require(int d) const {
    if (!f0_) throw UsageError("evaluating an empty field");
    if (d > max_depth_)
      throw UsageError("field does not support this derivative depth");
  }

  int max_depth_ = 3;
  std::function<Out<D0>(const Pt<D0>&)> f0_;
  std::function<Out<D1>(const Pt<D1>&)> f1_;
  std::function<Out<D2>(const Pt<D2>&)> f2_;
  std::function<Out<D3>(const Pt<D3>&)> f3_;
};

/// Real-valued function on a chart.
class ScalarField : public MultiFunction<detail::ScalarOut> {
 public:
  using MultiFunction::MultiFunction;
  ScalarField() = default;
};

/// Map between charts (components in the target chart).  Also used for
/// vector fields, whose components live in the tangent frame of `dim_in`.
class CoordMap : public MultiFunction<detail::VectorOut> {
 public:
  CoordMap() = default;
  template <class F,
            std::enable_if_t<!std::is_base_of_v<detail::MultiFunctionTag,
                                                std::decay_t<F>>,
                             int> = 0>
  CoordMap(F f, int dim_in, int dim_out, int max_depth = 3)
      : MultiFunction(std::move(f), max_depth),
        dim_in_(dim_in),
        dim_out_(dim_out) {}

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }

 private:
  int dim_in_ = 0;
  int dim_out_ = 0;
};

using VectorField = CoordMap;

/// Covector-valued field (components of a one-form).
class OneFormField : public MultiFunction<detail::VectorOut> {
 public:
  using MultiFunction::MultiFunction;
  OneFormField() = default;
};

/// Matrix-valued field without symmetry constraints.
class MatrixField : public MultiFunction<detail::MatrixOut> {
 public:
  using MultiFunction::MultiFunction;
  MatrixField() = default;
};

namespace detail {
template <class M>
M antisymmetrize(M m) {
  M out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out(i, j) = (m(i, j) - m(j, i)) * 0.5;
  return out;
}
}  // namespace detail

/// Antisymmetric contravariant two-tensor field (Poisson-type tensor).
/// The constructor antisymmetrizes, so formulas may populate both triangles
/// or rely on the wrapper to clean up roundoff.
class BivectorField : public MultiFunction<detail::MatrixOut> {
 public:
  BivectorField() = default;
  template <class F,
            std::enable_if_t<!std::is_base_of_v<detail::MultiFunctionTag,
                                                std::decay_t<F>>,
                             int> = 0>
  BivectorField(F f, int max_depth = 3)
      : MultiFunction(
            [f](const auto& x) { return detail::antisymmetrize(f(x)); },
            max_depth) {}
};

/// Antisymmetric covariant two-tensor field (two-form in components).
class TwoFormField : public MultiFunction<detail::MatrixOut> {
 public:
  TwoFormField() = default;
  template <class F,
            std::enable_if_t<!std::is_base_of_v<detail::MultiFunctionTag,
                                                std::decay_t<F>>,
                             int> = 0>
  TwoFormField(F f, int max_depth = 3)
      : MultiFunction(
            [f](const auto& x) { return detail::antisymmetrize(f(x)); },
            max_depth) {}
};

// -- small combinators used throughout the reduction code ----------------

inline ScalarField compose(const ScalarField& f, const CoordMap& m) {
  ScalarField out([f, m](const auto& x) { return f(m(x)); });
  out.restrict_depth(std::min(f.max_depth(), m.max_depth()));
  return out;
}

inline CoordMap compose(const CoordMap& outer, const CoordMap& inner) {
  CoordMap out([outer, inner](const auto& x) { return outer(inner(x)); },
               inner.dim_in(), outer.dim_out());
  out.restrict_depth(std::min(outer.max_depth(), inner.max_depth()));
  return out;
}

inline ScalarField constant_field(double c) {
  return ScalarField([c](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    (void)x;
    return T(c);
  });
}

}  // namespace gmred
