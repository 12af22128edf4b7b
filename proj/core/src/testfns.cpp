#include "gmred/harness/testfns.hpp"

#include <algorithm>
#include <vector>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

ScalarField random_test_function(const Chart& chart, Sampler& rng) {
  const int dim = chart.dim();
  const int terms = 3;
  std::vector<double> coef(terms);
  std::vector<std::vector<int>> mode(terms, std::vector<int>(dim, 0));
  for (int k = 0; k < terms; ++k) {
    coef[k] = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < dim; ++i) {
      const bool ang = i < static_cast<int>(chart.angle.size()) &&
                       chart.angle[i];
      const double u = rng.uniform01();
      if (ang) {
        mode[k][i] = std::min(2, static_cast<int>(u * 3.0));
      } else {
        mode[k][i] = std::min(3, static_cast<int>(u * 4.0));
      }
    }
  }
  std::vector<bool> ang(chart.angle.begin(), chart.angle.end());
  return ScalarField([coef, mode, ang](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    using std::cos;
    using std::sin;
    T acc(0.0);
    for (size_t k = 0; k < coef.size(); ++k) {
      T term(coef[k]);
      for (size_t i = 0; i < x.size(); ++i) {
        const int m = mode[k][i];
        if (i < ang.size() && ang[i]) {
          if (m == 1)
            term = term * sin(x[i]);
          else if (m == 2)
            term = term * cos(x[i]);
        } else {
          for (int e = 0; e < m; ++e) term = term * x[i];
        }
      }
      acc += term;
    }
    return acc;
  });
}

}  // namespace gmred
