#include "gmred/reduction/homogeneous.hpp"

#include <algorithm>
#include <cmath>

namespace gmred {

ScalarField hom_to_section(const ScalarField& hom, const ScalingBundle& b) {
  auto sec = b.quotient.section;
  auto f = b.scale;
  ScalarField out([hom, sec, f](const auto& y) {
    auto x = sec(y);
    return hom(x) / f(x);
  });
  out.restrict_depth(std::min({hom.max_depth(), sec.max_depth(),
                               f.max_depth()}));
  return out;
}

ScalarField section_to_hom(const ScalarField& h, const ScalingBundle& b) {
  auto proj = b.quotient.project;
  auto f = b.scale;
  ScalarField out([h, proj, f](const auto& x) {
    return f(x) * h(proj(x));
  });
  out.restrict_depth(std::min({h.max_depth(), proj.max_depth(),
                               f.max_depth()}));
  return out;
}

double hamiltonian_homogeneity_residual(const ScalarField& hom,
                                        const ScalingBundle& b, double s,
                                        const Point& x) {
  return std::abs(hom(b.action.apply(s, x)) - s * hom(x));
}

double hom_round_trip_residual(const ScalarField& hom, const ScalingBundle& b,
                               const Point& x) {
  auto back = section_to_hom(hom_to_section(hom, b), b);
  return std::abs(back(x) - hom(x));
}

}  // namespace gmred
