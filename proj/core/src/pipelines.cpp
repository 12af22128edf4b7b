#include "gmred/reduction/pipelines.hpp"

#include <algorithm>

#include "gmred/numcore/calculus.hpp"

namespace gmred {

ScalingBundle induce_scaling_on_quotient(const CompatiblePair& cp,
                                         const QuotientChart& k_quotient) {
  auto act = cp.scaling.action.map;
  auto proj = cp.standard_q.project;
  auto sec = cp.standard_q.section;
  const int p_dim = cp.standard_q.base.dim();

  CoordMap act_p(
      [act, proj, sec](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        // in = [s, y...]; act upstairs on section(y), then project back.
        Pt<T> y(in.begin() + 1, in.end());
        auto x = sec(y);
        Pt<T> up;
        up.reserve(x.size() + 1);
        up.push_back(in[0]);
        up.insert(up.end(), x.begin(), x.end());
        return proj(act(up));
      },
      1 + p_dim, p_dim);
  act_p.restrict_depth(std::min({act.max_depth(), proj.max_depth(),
                                 sec.max_depth()}));

  ScalarField f_p = compose(cp.scaling.scale, sec);
  return ScalingBundle{k_quotient, Action{GroupKind::RTimes, act_p}, f_p};
}

Action induce_standard_on_base(const CompatiblePair& cp) {
  auto act = cp.standard.map;
  auto proj = cp.scaling.quotient.project;
  auto sec = cp.scaling.quotient.section;
  const int c_dim = cp.scaling.quotient.base.dim();

  CoordMap act_c(
      [act, proj, sec](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        Pt<T> z(in.begin() + 1, in.end());
        auto x = sec(z);
        Pt<T> up;
        up.reserve(x.size() + 1);
        up.push_back(in[0]);
        up.insert(up.end(), x.begin(), x.end());
        return proj(act(up));
      },
      1 + c_dim, c_dim);
  act_c.restrict_depth(std::min({act.max_depth(), proj.max_depth(),
                                 sec.max_depth()}));
  return Action{cp.standard.kind, act_c};
}

PipelineResult pipeline_A(const CompatiblePair& cp,
                          const QuotientChart& k_quotient) {
  PipelineResult out;
  auto poisson = reduce_symplectic_by_standard(cp.system, cp.standard,
                                               cp.standard_q);
  out.stages.push_back("symplectic[" + cp.system.chart.name +
                       "] --ordinary quotient--> poisson[" +
                       poisson.chart.name + "]");
  auto scaling_p = induce_scaling_on_quotient(cp, k_quotient);
  out.final_system = reduce_poisson_by_scaling(poisson, scaling_p);
  out.stages.push_back("poisson[" + poisson.chart.name +
                       "] --scaling quotient--> bracket data[" +
                       out.final_system.chart.name + "]");
  out.poisson_stage = std::move(poisson);
  out.induced_scaling = std::move(scaling_p);
  return out;
}

PipelineResult pipeline_B(const CompatiblePair& cp,
                          const QuotientChart& k_quotient) {
  PipelineResult out;
  auto contact = reduce_symplectic_by_scaling(cp.system, cp.scaling);
  out.stages.push_back("symplectic[" + cp.system.chart.name +
                       "] --scaling quotient--> contact[" +
                       contact.chart.name + "]");
  auto jac = jacobi_from_contact(contact);
  out.stages.push_back("contact[" + contact.chart.name +
                       "] --induced bracket data--> jacobi[" +
                       jac.chart.name + "]");
  auto act_c = induce_standard_on_base(cp);
  out.final_system = reduce_jacobi_by_standard(jac, act_c, k_quotient);
  out.stages.push_back("jacobi[" + jac.chart.name +
                       "] --ordinary quotient--> bracket data[" +
                       out.final_system.chart.name + "]");
  out.contact_stage = std::move(contact);
  out.contact_jacobi = std::move(jac);
  out.induced_standard = std::move(act_c);
  return out;
}

CoordMap equivalence_psi(const CompatiblePair& cp, const QuotientChart& k_a,
                         const QuotientChart& k_b) {
  auto sec_a = k_a.section;       // K_A -> P
  auto sec_std = cp.standard_q.section;  // P -> total
  auto p_scal = cp.scaling.quotient.project;  // total -> C
  auto p_b = k_b.project;         // C -> K_B
  CoordMap psi(
      [sec_a, sec_std, p_scal, p_b](const auto& y) {
        return p_b(p_scal(sec_std(sec_a(y))));
      },
      k_a.base.dim(), k_b.base.dim());
  psi.restrict_depth(std::min({sec_a.max_depth(), sec_std.max_depth(),
                               p_scal.max_depth(), p_b.max_depth()}));
  return psi;
}

}  // namespace gmred
