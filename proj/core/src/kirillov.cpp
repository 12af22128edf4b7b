#include "gmred/structures/kirillov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/errors.hpp"

namespace gmred {

const AtlasTransition& KirillovAtlas::transition(int from, int to) const {
  for (const auto& t : transitions)
    if (t.from == from && t.to == to) return t;
  throw UsageError("no transition " + std::to_string(from) + " -> " +
                   std::to_string(to));
}

VectorField kirillov_symbol(const KirillovAtlas& atlas,
                            const std::vector<ScalarField>& h_locals, int i) {
  if (i < 0 || i >= static_cast<int>(atlas.charts.size()))
    throw UsageError("atlas chart index out of range");
  if (h_locals.size() != atlas.charts.size())
    throw UsageError("need one local representative per chart");
  return jacobi_hvf(atlas.charts[i], h_locals[i]);
}

double cocycle_residual(const KirillovAtlas& atlas, int i, int j,
                        const Point& y) {
  const auto& fwd = atlas.transition(i, j);
  const auto& back = atlas.transition(j, i);
  auto there = fwd.map(y);
  auto home = back.map(there);
  return atlas.charts[i].chart.distance(home, y);
}

double factor_cocycle_residual(const KirillovAtlas& atlas, int i, int j,
                               const Point& y) {
  const auto& fwd = atlas.transition(i, j);
  const auto& back = atlas.transition(j, i);
  auto there = fwd.map(y);
  return std::abs(fwd.factor(y) * back.factor(there) - 1.0);
}

double bracket_transport_residual(const KirillovAtlas& atlas, int i, int j,
                                  const ScalarField& u, const ScalarField& v,
                                  const Point& y) {
  const auto& t = atlas.transition(i, j);
  auto map = t.map;
  auto factor = t.factor;
  ScalarField u_i([factor, u, map](const auto& z) {
    return factor(z) * u(map(z));
  });
  u_i.restrict_depth(std::min({factor.max_depth(), u.max_depth(),
                               map.max_depth()}));
  ScalarField v_i([factor, v, map](const auto& z) {
    return factor(z) * v(map(z));
  });
  v_i.restrict_depth(std::min({factor.max_depth(), v.max_depth(),
                               map.max_depth()}));
  auto lhs = jacobi_bracket(atlas.charts[i], u_i, v_i);
  auto rhs = jacobi_bracket(atlas.charts[j], u, v);
  return std::abs(lhs(y) - factor(y) * rhs(map(y)));
}

double section_transport_residual(const KirillovAtlas& atlas,
                                  const std::vector<ScalarField>& h_locals,
                                  int i, int j, const Point& y) {
  const auto& t = atlas.transition(i, j);
  return std::abs(h_locals[i](y) - t.factor(y) * h_locals[j](t.map(y)));
}

double symbol_overlap_residual(const KirillovAtlas& atlas,
                               const std::vector<ScalarField>& h_locals,
                               int i, int j, const Point& y) {
  const auto& t = atlas.transition(i, j);
  auto xi = kirillov_symbol(atlas, h_locals, i);
  auto xj = kirillov_symbol(atlas, h_locals, j);
  auto jac = jacobian(t.map);
  auto pushed = jac(y) * xi(y);
  auto there = xj(t.map(y));
  double worst = 0.0;
  for (size_t k = 0; k < pushed.size(); ++k)
    worst = std::max(worst, std::abs(pushed[k] - there[k]));
  return worst;
}

}  // namespace gmred
