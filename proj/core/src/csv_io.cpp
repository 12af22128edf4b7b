#include "gmred/harness/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

namespace gmred {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Chart& chart,
                          const Trajectory& traj) {
  os << 't';
  for (const auto& c : chart.coords) os << ',' << c;
  os << '\n';
  for (size_t i = 0; i < traj.size(); ++i) {
    os << g17(traj.times[i]);
    for (double v : traj.states[i]) os << ',' << g17(v);
    os << '\n';
  }
  if (traj.truncated)
    os << "# truncated = " << traj.truncation_reason << '\n';
}

void write_reconstruction_csv(std::ostream& os, const Chart& total,
                              const Chart& base,
                              const ReconstructedTrajectory& rt,
                              const Trajectory& direct) {
  os << 't';
  for (const auto& c : base.coords) os << ",gamma_" << c;
  for (const auto& c : total.coords) os << ",phi_" << c;
  os << ",alpha";
  for (const auto& c : total.coords) os << ",Gamma_" << c;
  for (const auto& c : total.coords) os << ",direct_" << c;
  os << ",err\n";

  const size_t n = std::min(
      {rt.total.size(), rt.phi.size(), rt.gamma.size(), rt.alpha.size(),
       direct.size()});
  double sup = 0.0;
  for (size_t i = 0; i < n; ++i) {
    os << g17(rt.times[i]);
    for (double v : rt.gamma.states[i]) os << ',' << g17(v);
    for (double v : rt.phi.states[i]) os << ',' << g17(v);
    os << ',' << g17(rt.alpha[i]);
    for (double v : rt.total.states[i]) os << ',' << g17(v);
    for (double v : direct.states[i]) os << ',' << g17(v);
    const double err = total.distance(rt.total.states[i], direct.states[i]);
    sup = std::max(sup, err);
    os << ',' << g17(err) << '\n';
  }
  if (rt.gamma.truncated)
    os << "# reduced_truncated = " << rt.gamma.truncation_reason << '\n';
  if (direct.truncated)
    os << "# direct_truncated = " << direct.truncation_reason << '\n';
  os << "# sup_error = " << g17(sup) << '\n';
}

void write_jacobi_table_csv(std::ostream& os, const JacobiSystem& sys,
                            const VectorField& field, int points_per_axis) {
  const Chart& chart = sys.chart;
  const int dim = chart.dim();
  const bool with_h = static_cast<bool>(sys.hamiltonian);

  for (int i = 0; i < dim; ++i) os << (i ? "," : "") << chart.coords[i];
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      os << ",pi_" << chart.coords[i] << '_' << chart.coords[j];
  for (int i = 0; i < dim; ++i) os << ",e_" << chart.coords[i];
  for (int i = 0; i < dim; ++i) os << ",x_" << chart.coords[i];
  if (with_h) os << ",h";
  os << '\n';

  std::vector<int> idx(dim, 0);
  while (true) {
    Point x(dim);
    for (int i = 0; i < dim; ++i) {
      const auto [lo, hi] = chart.sample_box[i];
      x[i] = lo + (hi - lo) * (idx[i] + 0.5) / points_per_axis;
    }
    if (chart.in_domain(x)) {
      auto pi = sys.pi(x);
      auto e = sys.e(x);
      auto xv = field(x);
      for (int i = 0; i < dim; ++i) os << (i ? "," : "") << g17(x[i]);
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) os << ',' << g17(pi(i, j));
      for (int i = 0; i < dim; ++i) os << ',' << g17(e[i]);
      for (int i = 0; i < dim; ++i) os << ',' << g17(xv[i]);
      if (with_h) os << ',' << g17(sys.hamiltonian(x));
      os << '\n';
    }
    int k = dim - 1;
    while (k >= 0 && ++idx[k] == points_per_axis) idx[k--] = 0;
    if (k < 0) break;
  }
}

}  // namespace gmred
