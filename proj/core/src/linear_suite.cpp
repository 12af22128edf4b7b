#include <algorithm>
#include <string>
#include <vector>

#include "gmred/examples/suite.hpp"
#include "gmred/numcore/calculus.hpp"

namespace gmred {
namespace {

std::string num_name(const char* base, int i) {
  return std::string(base) + std::to_string(i);
}

}  // namespace

ExampleSuite build_linear_ctq(int n, int i0, std::vector<ScalarField> y,
                              int translation_axis) {
  if (n < 1) throw UsageError("build_linear_ctq: need n >= 1");
  if (i0 < 1 || i0 > n)
    throw UsageError("build_linear_ctq: chart index i0 out of range");
  if (static_cast<int>(y.size()) != n)
    throw UsageError("build_linear_ctq: need one coefficient per dimension");
  if (translation_axis >= n)
    throw UsageError("build_linear_ctq: translation axis out of range");

  const int iz = i0 - 1;           // 0-based normalizing fiber index
  const int t = translation_axis;  // 0-based translated q index, -1 = none

  int ydepth = 3;
  for (const auto& f : y) ydepth = std::min(ydepth, f.max_depth());
  std::vector<OneFormField> dy;
  dy.reserve(y.size());
  for (const auto& f : y) dy.push_back(differential(f));

  // q indices surviving the ordinary quotient, and their positions there.
  std::vector<int> kept_q;
  for (int i = 0; i < n; ++i)
    if (i != t) kept_q.push_back(i);
  const int qn = static_cast<int>(kept_q.size());
  std::vector<int> q_pos(n, -1);
  for (int k = 0; k < qn; ++k) q_pos[kept_q[k]] = k;
  const int iz_k = q_pos[iz];  // K position of the normalizing q, -1 if cut

  // --- charts -----------------------------------------------------------
  Chart total;
  total.name = "linear-total";
  for (int i = 1; i <= n; ++i) total.coords.push_back(num_name("q", i));
  for (int i = 1; i <= n; ++i) total.coords.push_back(num_name("p", i));
  total.angle.assign(2 * n, false);
  total.domain_check = [n, iz](const Point& x) { return x[n + iz] > 0.0; };
  total.sample_box.assign(2 * n, {-1.5, 1.5});
  total.sample_box[n + iz] = {0.4, 1.8};

  Chart cchart;
  cchart.name = "linear-contact";
  for (int i = 1; i <= n; ++i) cchart.coords.push_back(num_name("q", i));
  for (int j = 1; j <= n; ++j)
    if (j != i0) cchart.coords.push_back(num_name("v", j));
  cchart.angle.assign(2 * n - 1, false);
  cchart.sample_box.assign(2 * n - 1, {-1.5, 1.5});

  Chart pchart;
  pchart.name = "linear-quotient";
  for (int i : kept_q) pchart.coords.push_back(num_name("q", i + 1));
  for (int j = 1; j <= n; ++j) pchart.coords.push_back(num_name("p", j));
  pchart.angle.assign(qn + n, false);
  pchart.domain_check = [qn, iz](const Point& x) { return x[qn + iz] > 0.0; };
  pchart.sample_box.assign(qn + n, {-1.5, 1.5});
  pchart.sample_box[qn + iz] = {0.4, 1.8};

  Chart kchart;
  kchart.name = "linear-reduced";
  for (int i : kept_q) kchart.coords.push_back(num_name("q", i + 1));
  for (int j = 1; j <= n; ++j)
    if (j != i0) kchart.coords.push_back(num_name("v", j));
  kchart.angle.assign(qn + n - 1, false);
  kchart.sample_box.assign(qn + n - 1, {-1.5, 1.5});

  ExampleSuite suite;
  suite.name = "linear";

  // --- total chart: canonical form, fiberwise-linear Hamiltonian --------
  TwoFormField omega([n](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    (void)x;
    Mat<T> w(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      w(i, n + i) = T(1.0);
      w(n + i, i) = T(-1.0);
    }
    return w;
  });

  ScalarField hamiltonian([y, n](const auto& x) {
    using T = detail::ElemOf<decltype(x)>;
    Pt<T> q(x.begin(), x.begin() + n);
    T acc(0.0);
    for (int j = 0; j < n; ++j) acc += y[j](q) * x[n + j];
    return acc;
  });
  hamiltonian.restrict_depth(ydepth);

  VectorField x_total(
      [y, dy, n](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        Pt<T> q(x.begin(), x.begin() + n);
        Pt<T> out(2 * n, T(0.0));
        for (int i = 0; i < n; ++i) out[i] = y[i](q);
        for (int j = 0; j < n; ++j) {
          auto g = dy[j](q);
          for (int i = 0; i < n; ++i) out[n + i] -= x[n + j] * g[i];
        }
        return out;
      },
      2 * n, 2 * n);
  x_total.restrict_depth(ydepth - 1);
  suite.total_field_closed = x_total;

  // --- symmetries -------------------------------------------------------
  CoordMap scal_map(
      [n](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        Pt<T> out(in.begin() + 1, in.end());
        for (int j = 0; j < n; ++j) out[n + j] = in[0] * out[n + j];
        return out;
      },
      2 * n + 1, 2 * n);
  ScalarField scale_fn([n, iz](const auto& x) { return x[n + iz]; });

  CoordMap trans_map(
      [t](const auto& in) {
        using T = detail::ElemOf<decltype(in)>;
        Pt<T> out(in.begin() + 1, in.end());
        if (t >= 0) out[t] = out[t] + in[0];
        return out;
      },
      2 * n + 1, 2 * n);

  // --- quotient presentations -------------------------------------------
  CoordMap p_scal(
      [n, iz](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        Pt<T> out(x.begin(), x.begin() + n);
        for (int j = 0; j < n; ++j)
          if (j != iz) out.push_back(x[n + j] / x[n + iz]);
        return out;
      },
      2 * n, 2 * n - 1);
  CoordMap sec_scal(
      [n, iz](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        Pt<T> out(z.begin(), z.begin() + n);
        out.resize(2 * n, T(0.0));
        int k = n;
        for (int j = 0; j < n; ++j)
          out[n + j] = (j == iz) ? T(1.0) : z[k++];
        return out;
      },
      2 * n - 1, 2 * n);

  CoordMap p_std(
      [n, kept_q](const auto& x) {
        using T = detail::ElemOf<decltype(x)>;
        Pt<T> out;
        out.reserve(kept_q.size() + n);
        for (int i : kept_q) out.push_back(x[i]);
        for (int j = 0; j < n; ++j) out.push_back(x[n + j]);
        return out;
      },
      2 * n, qn + n);
  CoordMap sec_std(
      [n, kept_q](const auto& yv) {
        using T = detail::ElemOf<decltype(yv)>;
        Pt<T> out(2 * n, T(0.0));
        int k = 0;
        for (int i : kept_q) out[i] = yv[k++];
        for (int j = 0; j < n; ++j) out[n + j] = yv[k++];
        return out;
      },
      qn + n, 2 * n);

  CoordMap p_ka(
      [qn, n, iz](const auto& yv) {
        using T = detail::ElemOf<decltype(yv)>;
        Pt<T> out(yv.begin(), yv.begin() + qn);
        for (int j = 0; j < n; ++j)
          if (j != iz) out.push_back(yv[qn + j] / yv[qn + iz]);
        return out;
      },
      qn + n, qn + n - 1);
  CoordMap sec_ka(
      [qn, n, iz](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        Pt<T> out(k.begin(), k.begin() + qn);
        out.resize(qn + n, T(0.0));
        int m = qn;
        for (int j = 0; j < n; ++j)
          out[qn + j] = (j == iz) ? T(1.0) : k[m++];
        return out;
      },
      qn + n - 1, qn + n);

  CoordMap p_kb(
      [n, kept_q](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        Pt<T> out;
        out.reserve(z.size() - (n - kept_q.size()));
        for (int i : kept_q) out.push_back(z[i]);
        out.insert(out.end(), z.begin() + n, z.end());
        return out;
      },
      2 * n - 1, qn + n - 1);
  CoordMap sec_kb(
      [n, qn, kept_q](const auto& k) {
        using T = detail::ElemOf<decltype(k)>;
        Pt<T> out(n, T(0.0));
        int m = 0;
        for (int i : kept_q) out[i] = k[m++];
        out.insert(out.end(), k.begin() + qn, k.end());
        return out;
      },
      qn + n - 1, 2 * n - 1);

  CompatiblePair cp;
  cp.system = SymplecticSystem{total, omega, hamiltonian};
  cp.scaling = ScalingBundle{QuotientChart{total, cchart, p_scal, sec_scal},
                             Action{GroupKind::RTimes, scal_map}, scale_fn};
  cp.standard = Action{GroupKind::RAdd, trans_map};
  cp.standard_q = QuotientChart{total, pchart, p_std, sec_std};
  suite.pair = cp;
  suite.k_quotient_a = QuotientChart{pchart, kchart, p_ka, sec_ka};
  suite.k_quotient_b = QuotientChart{cchart, kchart, p_kb, sec_kb};

  // --- reference objects on P -------------------------------------------
  BivectorField pi_p([qn, n, kept_q](const auto& yv) {
    using T = detail::ElemOf<decltype(yv)>;
    (void)yv;
    Mat<T> m(qn + n, qn + n);
    int k = 0;
    for (int i : kept_q) {
      m(k, qn + i) = T(1.0);
      m(qn + i, k) = T(-1.0);
      ++k;
    }
    return m;
  });
  ScalarField h_p = compose(hamiltonian, sec_std);
  suite.quotient_poisson_closed = PoissonSystem{pchart, pi_p, h_p};

  // --- reference objects on C -------------------------------------------
  OneFormField eta_c([n, iz](const auto& z) {
    using T = detail::ElemOf<decltype(z)>;
    Pt<T> out(2 * n - 1, T(0.0));
    int k = n;
    for (int j = 0; j < n; ++j) out[j] = (j == iz) ? T(1.0) : z[k++];
    return out;
  });
  ScalarField h_c([y, n, iz](const auto& z) {
    using T = detail::ElemOf<decltype(z)>;
    Pt<T> q(z.begin(), z.begin() + n);
    T acc(0.0);
    int k = n;
    for (int j = 0; j < n; ++j) {
      T vj = (j == iz) ? T(1.0) : z[k++];
      acc += y[j](q) * vj;
    }
    return acc;
  });
  h_c.restrict_depth(ydepth);
  suite.contact_closed = ContactFormSystem{cchart, eta_c, h_c};

  VectorField reeb_c(
      [n, iz](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        (void)z;
        Pt<T> out(2 * n - 1, T(0.0));
        out[iz] = T(1.0);
        return out;
      },
      2 * n - 1, 2 * n - 1);
  suite.reeb_closed = reeb_c;

  VectorField x_c(
      [y, dy, n, iz](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        Pt<T> q(z.begin(), z.begin() + n);
        Pt<T> v(n, T(1.0));
        {
          int k = n;
          for (int j = 0; j < n; ++j)
            if (j != iz) v[j] = z[k++];
        }
        std::vector<Pt<T>> g;
        g.reserve(n);
        for (int m2 = 0; m2 < n; ++m2) g.push_back(dy[m2](q));
        T drift(0.0);
        for (int m2 = 0; m2 < n; ++m2) drift += g[m2][iz] * v[m2];
        Pt<T> out(2 * n - 1, T(0.0));
        for (int i = 0; i < n; ++i) out[i] = y[i](q);
        int k = n;
        for (int j = 0; j < n; ++j) {
          if (j == iz) continue;
          T acc(0.0);
          for (int m2 = 0; m2 < n; ++m2) acc += g[m2][j] * v[m2];
          out[k] = -acc + v[j] * drift;
          ++k;
        }
        return out;
      },
      2 * n - 1, 2 * n - 1);
  x_c.restrict_depth(ydepth - 1);
  suite.contact_field_closed = x_c;

  BivectorField pi_c([n, iz](const auto& z) {
    using T = detail::ElemOf<decltype(z)>;
    Mat<T> m(2 * n - 1, 2 * n - 1);
    int k = n;
    for (int j = 0; j < n; ++j) {
      if (j == iz) continue;
      m(j, k) = T(1.0);
      m(k, j) = T(-1.0);
      m(iz, k) = -z[k];
      m(k, iz) = z[k];
      ++k;
    }
    return m;
  });
  VectorField e_c(
      [n, iz](const auto& z) {
        using T = detail::ElemOf<decltype(z)>;
        (void)z;
        Pt<T> out(2 * n - 1, T(0.0));
        out[iz] = T(-1.0);
        return out;
      },
      2 * n - 1, 2 * n - 1);

  // --- reference objects on K -------------------------------------------
  BivectorField pi_k([qn, n, iz, iz_k, q_pos](const auto& kpt) {
    using T = detail::ElemOf<decltype(kpt)>;
    Mat<T> m(qn + n - 1, qn + n - 1);
    int vk = qn;
    for (int j = 0; j < n; ++j) {
      if (j == iz) continue;
      if (q_pos[j] >= 0) {
        m(q_pos[j], vk) = T(1.0);
        m(vk, q_pos[j]) = T(-1.0);
      }
      if (iz_k >= 0) {
        m(iz_k, vk) = -kpt[vk];
        m(vk, iz_k) = kpt[vk];
      }
      ++vk;
    }
    return m;
  });
  VectorField e_k(
      [qn, n, iz_k](const auto& kpt) {
        using T = detail::ElemOf<decltype(kpt)>;
        (void)kpt;
        Pt<T> out(qn + n - 1, T(0.0));
        if (iz_k >= 0) out[iz_k] = T(-1.0);
        return out;
      },
      qn + n - 1, qn + n - 1);
  ScalarField h_k([y, n, iz, qn, q_pos](const auto& kpt) {
    using T = detail::ElemOf<decltype(kpt)>;
    Pt<T> q(n, T(0.0));
    for (int i = 0; i < n; ++i)
      if (q_pos[i] >= 0) q[i] = kpt[q_pos[i]];
    T acc(0.0);
    int k = qn;
    for (int j = 0; j < n; ++j) {
      T vj = (j == iz) ? T(1.0) : kpt[k++];
      acc += y[j](q) * vj;
    }
    return acc;
  });
  h_k.restrict_depth(ydepth);

  VectorField x_k(
      [y, dy, n, iz, qn, q_pos](const auto& kpt) {
        using T = detail::ElemOf<decltype(kpt)>;
        Pt<T> q(n, T(0.0));
        for (int i = 0; i < n; ++i)
          if (q_pos[i] >= 0) q[i] = kpt[q_pos[i]];
        Pt<T> v(n, T(1.0));
        {
          int k = qn;
          for (int j = 0; j < n; ++j)
            if (j != iz) v[j] = kpt[k++];
        }
        std::vector<Pt<T>> g;
        g.reserve(n);
        for (int m2 = 0; m2 < n; ++m2) g.push_back(dy[m2](q));
        T drift(0.0);
        for (int m2 = 0; m2 < n; ++m2) drift += g[m2][iz] * v[m2];
        Pt<T> out(qn + n - 1, T(0.0));
        for (int i = 0; i < n; ++i)
          if (q_pos[i] >= 0) out[q_pos[i]] = y[i](q);
        int k = qn;
        for (int j = 0; j < n; ++j) {
          if (j == iz) continue;
          T acc(0.0);
          for (int m2 = 0; m2 < n; ++m2) acc += g[m2][j] * v[m2];
          out[k] = -acc + v[j] * drift;
          ++k;
        }
        return out;
      },
      qn + n - 1, qn + n - 1);
  x_k.restrict_depth(ydepth - 1);
  suite.reduced_field_closed = x_k;

  suite.jacobi_charts.push_back(
      {"contact-induced", JacobiSystem{cchart, pi_c, e_c, h_c}});
  suite.jacobi_charts.push_back(
      {"reduced-A", JacobiSystem{kchart, pi_k, e_k, h_k}});
  suite.jacobi_charts.push_back(
      {"reduced-B", JacobiSystem{kchart, pi_k, e_k, h_k}});
  suite.contact_jacobi_index = 0;
  suite.reduced_a_index = 1;
  suite.reduced_b_index = 2;

  // --- Poisson presentation on P ----------------------------------------
  {
    CoordMap act_p(
        [qn, n](const auto& in) {
          using T = detail::ElemOf<decltype(in)>;
          Pt<T> out(in.begin() + 1, in.end());
          for (int j = 0; j < n; ++j) out[qn + j] = in[0] * out[qn + j];
          return out;
        },
        qn + n + 1, qn + n);
    ScalarField f_p([qn, iz](const auto& yv) { return yv[qn + iz]; });
    PoissonPresentation pres;
    pres.label = "fiber-chart";
    pres.system = *suite.quotient_poisson_closed;
    pres.bundle =
        ScalingBundle{QuotientChart{pchart, kchart, p_ka, sec_ka},
                      Action{GroupKind::RTimes, act_p}, f_p};
    pres.reduces_to = suite.reduced_a_index;
    suite.poisson_presentations.push_back(std::move(pres));
  }

  // --- tool defaults ----------------------------------------------------
  suite.default_x0.assign(2 * n, 0.0);
  for (int i = 0; i < n; ++i) suite.default_x0[i] = 1.0 + 0.1 * i;
  for (int j = 0; j < n; ++j) suite.default_x0[n + j] = 0.8 + 0.15 * j;
  suite.default_x0[n + iz] = 1.25;
  suite.default_k0 = p_ka(p_std(suite.default_x0));
  suite.default_t0 = 0.0;
  suite.default_t1 = 1.0;
  suite.default_dt = 1e-3;

  {
    ReconstructionPreset pre;
    pre.label = "fiber-normalization";
    pre.bundle = cp.scaling;
    pre.full_field = x_total;
    pre.reduced_field = x_c;
    pre.alpha = ReconstructionPreset::Alpha::ReebDrift;
    pre.drift = reeb_c;
    pre.reduced_h = h_c;
    suite.reconstructions.push_back(std::move(pre));
  }

  return suite;
}

}  // namespace gmred
