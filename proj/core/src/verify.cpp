#include "gmred/harness/verify.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gmred/harness/testfns.hpp"
#include "gmred/integrate/rk4.hpp"
#include "gmred/numcore/calculus.hpp"
#include "gmred/numcore/errors.hpp"
#include "gmred/numcore/rng.hpp"
#include "gmred/reconstruction/reconstruct.hpp"
#include "gmred/reduction/homogeneous.hpp"
#include "gmred/reduction/pipelines.hpp"
#include "gmred/reduction/scaling.hpp"
#include "gmred/reduction/standard.hpp"
#include "gmred/structures/contact.hpp"
#include "gmred/structures/kirillov.hpp"
#include "gmred/structures/poisson.hpp"
#include "gmred/structures/symplectic.hpp"

namespace gmred {
namespace {

double tol_for(const VerifyOptions& opt, const std::string& name,
               double fallback) {
  auto it = opt.tol.find(name);
  if (it != opt.tol.end()) return it->second;
  auto slash = name.find('/');
  if (slash != std::string::npos) {
    it = opt.tol.find(name.substr(0, slash));
    if (it != opt.tol.end()) return it->second;
  }
  return fallback;
}

double random_group_param(Sampler& rng, GroupKind kind) {
  switch (kind) {
    case GroupKind::RTimes:
      return rng.uniform(0.3, 2.5);
    case GroupKind::RAdd:
      return rng.uniform(-1.0, 1.0);
    case GroupKind::Circle:
      return rng.uniform(0.0, 6.283185307179586);
  }
  return 1.0;
}

Point sample_in_box(Sampler& rng, const Chart& chart,
                    const std::vector<std::pair<double, double>>& box) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Point x(box.size());
    for (size_t i = 0; i < box.size(); ++i)
      x[i] = rng.uniform(box[i].first, box[i].second);
    if (chart.in_domain(x)) return x;
  }
  throw DomainError("overlap box on chart '" + chart.name +
                    "' rarely intersects its domain");
}

double max_abs_diff(const Point& a, const Point& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_diff(const Mat<double>& a, const Mat<double>& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

/// Spatial block of an action's Jacobian: d act(s, .)^i / d x^j.
Mat<double> action_jacobian(const Action& a, double s, const Point& x) {
  Point in;
  in.reserve(x.size() + 1);
  in.push_back(s);
  in.insert(in.end(), x.begin(), x.end());
  Mat<double> full = jacobian(a.map)(in);
  Mat<double> j(full.rows(), full.cols() - 1);
  for (int r = 0; r < j.rows(); ++r)
    for (int c = 0; c < j.cols(); ++c) j(r, c) = full(r, c + 1);
  return j;
}

std::array<double, 3> random_coeffs(Sampler& rng) {
  std::array<double, 3> c;
  for (double& v : c) v = rng.uniform(-1.0, 1.0);
  return c;
}

/// Runs the checks in a fixed order on a single sampler stream.
class Battery {
 public:
  Battery(const ExampleSuite& suite, const VerifyOptions& opt)
      : suite_(suite), opt_(opt), rng_(opt.seed) {}

  std::vector<CheckReport> run() {
    structure();
    symmetry();
    reduction();
    equivalence();
    reconstruction();
    return std::move(reports_);
  }

 private:
  void check(const std::string& name, double fallback_tol,
             const std::function<void(Worst&)>& body) {
    Worst w;
    const double tol = tol_for(opt_, name, fallback_tol);
    try {
      body(w);
      reports_.push_back(make_report(name, suite_.name, w, tol));
    } catch (const Error&) {
      CheckReport r = make_report(name, suite_.name, w, tol);
      r.max_deviation = std::numeric_limits<double>::infinity();
      r.pass = false;
      reports_.push_back(std::move(r));
    }
  }

  // ---- structure invariants --------------------------------------------

  void jacobi_identity_check(const std::string& name, const Chart& chart,
                             const std::function<double(
                                 const ScalarField&, const ScalarField&,
                                 const ScalarField&, const Point&)>& residual) {
    check(name, 1e-8, [&](Worst& w) {
      for (int t = 0; t < 20; ++t) {
        ScalarField f = random_test_function(chart, rng_);
        ScalarField g = random_test_function(chart, rng_);
        ScalarField h = random_test_function(chart, rng_);
        for (int k = 0; k < 50; ++k) {
          Point x = rng_.sample(chart);
          w.feed(residual(f, g, h, x), x);
        }
      }
    });
  }

  void structure() {
    for (const auto& nj : suite_.jacobi_charts) {
      jacobi_identity_check(
          "jacobi-identity/" + nj.label, nj.system.chart,
          [&](const ScalarField& f, const ScalarField& g, const ScalarField& h,
              const Point& x) {
            return jacobi_identity_residual(nj.system, f, g, h, x);
          });
    }
    auto poisson_identity = [&](const PoissonSystem& ps) {
      jacobi_identity_check(
          "poisson-jacobi-identity/" + ps.chart.name, ps.chart,
          [&](const ScalarField& f, const ScalarField& g, const ScalarField& h,
              const Point& x) {
            return jacobi_identity_residual(ps, f, g, h, x);
          });
    };
    if (suite_.lie_poisson) poisson_identity(*suite_.lie_poisson);
    if (suite_.quotient_poisson_closed)
      poisson_identity(*suite_.quotient_poisson_closed);
    if (suite_.rescaled_poisson_closed)
      poisson_identity(*suite_.rescaled_poisson_closed);

    if (suite_.contact_closed) {
      const ContactFormSystem& c = *suite_.contact_closed;
      check("contact-axioms", 1e-9, [&](Worst& w) {
        for (int k = 0; k < 200; ++k) {
          Point x = rng_.sample(c.chart);
          w.feed(contact_axiom_residual(c, x), x);
        }
      });
      if (suite_.reeb_closed) {
        check("reeb-closed-form", 1e-8, [&](Worst& w) {
          VectorField r = reeb_field(c);
          for (int k = 0; k < 200; ++k) {
            Point x = rng_.sample(c.chart);
            w.feed(max_abs_diff(r(x), (*suite_.reeb_closed)(x)), x);
          }
        });
      }
      if (c.hamiltonian) {
        check("contact-field-conditions", 1e-9, [&](Worst& w) {
          for (int k = 0; k < 200; ++k) {
            Point x = rng_.sample(c.chart);
            w.feed(contact_solve_residual(c, c.hamiltonian, x), x);
          }
        });
        if (suite_.contact_field_closed) {
          check("contact-field-closed-form", 1e-8, [&](Worst& w) {
            VectorField xh = contact_hvf(c);
            for (int k = 0; k < 200; ++k) {
              Point x = rng_.sample(c.chart);
              w.feed(max_abs_diff(xh(x), (*suite_.contact_field_closed)(x)),
                     x);
            }
          });
        }
      }
    }

    if (suite_.pair) {
      check("symplectic-closedness", 1e-9, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          Point x = rng_.sample(suite_.pair->system.chart);
          w.feed(symplectic_closedness_residual(suite_.pair->system, x), x);
        }
      });
    }
  }

  // ---- symmetry identities ---------------------------------------------

  void section_check(const std::string& label, const QuotientChart& q) {
    check("section-consistency/" + label, 1e-10, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        Point y = rng_.sample(q.base);
        w.feed(section_residual(q, y), y);
      }
    });
  }

  void fiber_check(const std::string& label, const QuotientChart& q,
                   const Action& a) {
    check("fiber-independence/" + label, 1e-9, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        double s = random_group_param(rng_, a.kind);
        Point x = rng_.sample(q.total);
        w.feed(fiber_independence_residual(q, a, s, x), x);
      }
    });
  }

  void bundle_checks(const std::string& label, const ScalingBundle& b) {
    check("scale-function-homogeneity" + label, 1e-9, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        double s = rng_.uniform(0.3, 2.5);
        Point x = rng_.sample(b.quotient.total);
        w.feed(homogeneity_residual(b, s, x), x);
      }
    });
    check("scale-euler-identity" + label, 1e-8, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        Point x = rng_.sample(b.quotient.total);
        w.feed(euler_residual(b, x), x);
      }
    });
  }

  void symmetry() {
    if (suite_.pair) {
      const CompatiblePair& cp = *suite_.pair;
      const ScalingBundle& b = cp.scaling;
      const Chart& total = cp.system.chart;

      bundle_checks("", b);
      check("hamiltonian-homogeneity", 1e-9, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          double s = rng_.uniform(0.3, 2.5);
          Point x = rng_.sample(total);
          w.feed(hamiltonian_homogeneity_residual(cp.system.hamiltonian, b, s,
                                                  x),
                 x);
        }
      });
      check("form-homogeneity", 1e-8, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          double s = rng_.uniform(0.3, 2.5);
          Point x = rng_.sample(total);
          Mat<double> j = action_jacobian(b.action, s, x);
          Mat<double> lhs =
              j.transposed() * cp.system.omega(b.action.apply(s, x)) * j;
          Mat<double> ref = cp.system.omega(x);
          double d = 0.0;
          for (int r = 0; r < lhs.rows(); ++r)
            for (int c2 = 0; c2 < lhs.cols(); ++c2)
              d = std::max(d, std::abs(lhs(r, c2) - s * ref(r, c2)));
          w.feed(d, x);
        }
      });
      check("form-invariance", 1e-8, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          double s = random_group_param(rng_, cp.standard.kind);
          Point x = rng_.sample(total);
          Mat<double> j = action_jacobian(cp.standard, s, x);
          Mat<double> lhs =
              j.transposed() * cp.system.omega(cp.standard.apply(s, x)) * j;
          w.feed(max_abs_diff(lhs, cp.system.omega(x)), x);
        }
      });
      check("symmetry-invariance", 1e-9, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          double s = random_group_param(rng_, cp.standard.kind);
          Point x = rng_.sample(total);
          w.feed(invariance_residual(cp.standard, cp.system.hamiltonian, s, x),
                 x);
        }
      });
      auto composition_check = [&](const std::string& label, const Action& a) {
        check("action-composition/" + label, 1e-9, [&](Worst& w) {
          for (int k = 0; k < 100; ++k) {
            double s1 = random_group_param(rng_, a.kind);
            double s2 = random_group_param(rng_, a.kind);
            Point x = rng_.sample(total);
            w.feed(composition_residual(a, total, s1, s2, x), x);
          }
        });
      };
      composition_check("scaling", b.action);
      composition_check("ordinary", cp.standard);

      section_check(b.quotient.base.name, b.quotient);
      section_check(cp.standard_q.base.name, cp.standard_q);
      if (suite_.k_quotient_a)
        section_check(suite_.k_quotient_a->base.name + "-A",
                      *suite_.k_quotient_a);
      if (suite_.k_quotient_b)
        section_check(suite_.k_quotient_b->base.name + "-B",
                      *suite_.k_quotient_b);
      if (suite_.rescaled_quotient)
        section_check(suite_.rescaled_quotient->base.name,
                      *suite_.rescaled_quotient);

      fiber_check("scaling", b.quotient, b.action);
      fiber_check("ordinary", cp.standard_q, cp.standard);
      if (suite_.rescaled_quotient)
        fiber_check("rescaled", *suite_.rescaled_quotient, cp.standard);
    }

    for (const auto& pres : suite_.poisson_presentations) {
      const ScalingBundle& pb = pres.bundle;
      bundle_checks("/" + pres.label, pb);
      section_check(pres.label, pb.quotient);
      fiber_check(pres.label, pb.quotient, pb.action);
      check("bivector-homogeneity/" + pres.label, 1e-8, [&](Worst& w) {
        for (int k = 0; k < 100; ++k) {
          double s = rng_.uniform(0.3, 2.5);
          Point x = rng_.sample(pb.quotient.total);
          Mat<double> j = action_jacobian(pb.action, s, x);
          Mat<double> lhs = j * pres.system.pi(x) * j.transposed();
          Mat<double> ref = pres.system.pi(pb.action.apply(s, x));
          double d = 0.0;
          for (int r = 0; r < lhs.rows(); ++r)
            for (int c2 = 0; c2 < lhs.cols(); ++c2)
              d = std::max(d, std::abs(lhs(r, c2) - s * ref(r, c2)));
          w.feed(d, x);
        }
      });
    }

    if (suite_.lie_poisson && suite_.casimir) {
      check("casimir-bracket", 1e-9, [&](Worst& w) {
        for (int t = 0; t < 5; ++t) {
          ScalarField f = random_test_function(suite_.lie_poisson->chart, rng_);
          ScalarField br =
              poisson_bracket(*suite_.lie_poisson, *suite_.casimir, f);
          for (int k = 0; k < 20; ++k) {
            Point x = rng_.sample(suite_.lie_poisson->chart);
            w.feed(std::abs(br(x)), x);
          }
        }
      });
    }

    if (suite_.atlas && suite_.lie_section_locals && suite_.lie_bracket_coeffs) {
      const KirillovAtlas& at = *suite_.atlas;
      for (size_t i = 0; i < at.charts.size(); ++i) {
        check("lie-structure-correspondence/" + at.charts[i].chart.name, 1e-8,
              [&](Worst& w) {
                for (int t = 0; t < 5; ++t) {
                  auto xi = random_coeffs(rng_);
                  auto nu = random_coeffs(rng_);
                  ScalarField hx = suite_.lie_section_locals(xi)[i];
                  ScalarField hn = suite_.lie_section_locals(nu)[i];
                  ScalarField hb = suite_.lie_section_locals(
                      suite_.lie_bracket_coeffs(xi, nu))[i];
                  ScalarField br = jacobi_bracket(at.charts[i], hx, hn);
                  for (int k = 0; k < 10; ++k) {
                    Point y = rng_.sample(at.charts[i].chart);
                    w.feed(
                        std::abs(br(y) - kLieCorrespondenceSign * hb(y)), y);
                  }
                }
              });
      }
    }

    if (suite_.atlas) {
      const KirillovAtlas& at = *suite_.atlas;
      for (const auto& tr : at.transitions) {
        const Chart& from_chart = at.charts[tr.from].chart;
        const Chart& to_chart = at.charts[tr.to].chart;
        const std::string tag =
            "/" + from_chart.name + "-to-" + to_chart.name;
        check("atlas-cocycle" + tag, 1e-6, [&](Worst& w) {
          for (int k = 0; k < 50; ++k) {
            Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
            w.feed(cocycle_residual(at, tr.from, tr.to, y), y);
          }
        });
        check("atlas-factor-cocycle" + tag, 1e-6, [&](Worst& w) {
          for (int k = 0; k < 50; ++k) {
            Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
            w.feed(factor_cocycle_residual(at, tr.from, tr.to, y), y);
          }
        });
        check("atlas-bracket-compatibility" + tag, 1e-6, [&](Worst& w) {
          for (int t = 0; t < 5; ++t) {
            ScalarField u = random_test_function(to_chart, rng_);
            ScalarField v = random_test_function(to_chart, rng_);
            for (int k = 0; k < 10; ++k) {
              Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
              w.feed(bracket_transport_residual(at, tr.from, tr.to, u, v, y),
                     y);
            }
          }
        });
        if (suite_.lie_section_locals) {
          check("atlas-section-transport" + tag, 1e-8, [&](Worst& w) {
            for (int t = 0; t < 5; ++t) {
              auto locals = suite_.lie_section_locals(random_coeffs(rng_));
              for (int k = 0; k < 10; ++k) {
                Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
                w.feed(
                    section_transport_residual(at, locals, tr.from, tr.to, y),
                    y);
              }
            }
          });
          check("atlas-symbol-overlap" + tag, 1e-8, [&](Worst& w) {
            for (int t = 0; t < 5; ++t) {
              auto locals = suite_.lie_section_locals(random_coeffs(rng_));
              for (int k = 0; k < 10; ++k) {
                Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
                w.feed(symbol_overlap_residual(at, locals, tr.from, tr.to, y),
                       y);
              }
            }
          });
        }
      }
    }

    if (suite_.atlas && suite_.lie_symbol_closed && suite_.lie_section_locals) {
      const KirillovAtlas& at = *suite_.atlas;
      for (size_t i = 0; i < at.charts.size(); ++i) {
        check("symbol-closed-form/" + at.charts[i].chart.name, 1e-8,
              [&](Worst& w) {
                for (int t = 0; t < 5; ++t) {
                  auto xi = random_coeffs(rng_);
                  VectorField generic = kirillov_symbol(
                      at, suite_.lie_section_locals(xi), static_cast<int>(i));
                  VectorField closed =
                      suite_.lie_symbol_closed(static_cast<int>(i), xi);
                  for (int k = 0; k < 20; ++k) {
                    Point y = rng_.sample(at.charts[i].chart);
                    w.feed(max_abs_diff(generic(y), closed(y)), y);
                  }
                }
              });
      }
      if (suite_.lie_poisson) {
        for (const auto& pres : suite_.poisson_presentations) {
          if (pres.reduces_to < 0 ||
              pres.reduces_to >= static_cast<int>(at.charts.size()))
            continue;
          const int i = pres.reduces_to;
          check("symbol-pushforward/" + at.charts[i].chart.name, 1e-8,
                [&](Worst& w) {
                  MatrixField jp = jacobian(pres.bundle.quotient.project);
                  for (int t = 0; t < 5; ++t) {
                    auto xi = random_coeffs(rng_);
                    ScalarField linear_h([xi](const auto& mu) {
                      return xi[0] * mu[0] + xi[1] * mu[1] + xi[2] * mu[2];
                    });
                    VectorField up =
                        poisson_hvf(*suite_.lie_poisson, linear_h);
                    VectorField closed = suite_.lie_symbol_closed(i, xi);
                    for (int k = 0; k < 20; ++k) {
                      Point y = rng_.sample(at.charts[i].chart);
                      Point x = pres.bundle.quotient.section(y);
                      w.feed(max_abs_diff(jp(x) * up(x), closed(y)), y);
                    }
                  }
                });
        }
      }
    }
  }

  // ---- reduction postconditions ----------------------------------------

  void compare_poisson(const std::string& stem, const PoissonSystem& generic,
                       const PoissonSystem& closed) {
    check(stem + "-bracket-closed-form", 1e-8, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        Point y = rng_.sample(closed.chart);
        w.feed(max_abs_diff(generic.pi(y), closed.pi(y)), y);
      }
    });
    check(stem + "-hamiltonian-closed-form", 1e-8, [&](Worst& w) {
      for (int k = 0; k < 100; ++k) {
        Point y = rng_.sample(closed.chart);
        w.feed(std::abs(generic.hamiltonian(y) - closed.hamiltonian(y)), y);
      }
    });
  }

  void reduction() {
    if (suite_.pair) {
      const CompatiblePair& cp = *suite_.pair;

      if (suite_.quotient_poisson_closed) {
        PoissonSystem generic =
            reduce_symplectic_by_standard(cp.system, cp.standard,
                                          cp.standard_q);
        compare_poisson("quotient", generic, *suite_.quotient_poisson_closed);
      }
      if (suite_.rescaled_quotient && suite_.rescaled_poisson_closed) {
        PoissonSystem generic = reduce_symplectic_by_standard(
            cp.system, cp.standard, *suite_.rescaled_quotient);
        compare_poisson("rescaled", generic, *suite_.rescaled_poisson_closed);
      }
      if (suite_.contact_closed) {
        const ContactFormSystem& closed = *suite_.contact_closed;
        ContactFormSystem generic =
            reduce_symplectic_by_scaling(cp.system, cp.scaling);
        check("contact-form-closed-form", 1e-8, [&](Worst& w) {
          for (int k = 0; k < 100; ++k) {
            Point z = rng_.sample(closed.chart);
            w.feed(max_abs_diff(generic.eta(z), closed.eta(z)), z);
          }
        });
        check("contact-hamiltonian-closed-form", 1e-8, [&](Worst& w) {
          for (int k = 0; k < 100; ++k) {
            Point z = rng_.sample(closed.chart);
            w.feed(std::abs(generic.hamiltonian(z) - closed.hamiltonian(z)),
                   z);
          }
        });
        if (suite_.contact_jacobi_index >= 0) {
          const JacobiSystem& ref =
              suite_.jacobi_charts[suite_.contact_jacobi_index].system;
          check("contact-bracket-closed-form", 1e-8, [&](Worst& w) {
            JacobiSystem induced = jacobi_from_contact(closed);
            for (int k = 0; k < 100; ++k) {
              Point z = rng_.sample(ref.chart);
              double d = std::max(max_abs_diff(induced.pi(z), ref.pi(z)),
                                  max_abs_diff(induced.e(z), ref.e(z)));
              w.feed(d, z);
            }
          });
        }
      }

      auto compare_jacobi = [&](const std::string& name,
                                const JacobiSystem& got,
                                const JacobiSystem& ref) {
        check(name, 1e-8, [&](Worst& w) {
          for (int k = 0; k < 100; ++k) {
            Point y = rng_.sample(ref.chart);
            double d = std::max(max_abs_diff(got.pi(y), ref.pi(y)),
                                max_abs_diff(got.e(y), ref.e(y)));
            if (got.hamiltonian && ref.hamiltonian)
              d = std::max(d, std::abs(got.hamiltonian(y) - ref.hamiltonian(y)));
            w.feed(d, y);
          }
        });
      };

      if (suite_.k_quotient_a && suite_.reduced_a_index >= 0) {
        PipelineResult ra = pipeline_A(cp, *suite_.k_quotient_a);
        const JacobiSystem& ref =
            suite_.jacobi_charts[suite_.reduced_a_index].system;
        compare_jacobi("reduced-bracket-closed-form-A", ra.final_system, ref);
        if (suite_.reduced_field_closed) {
          check("reduced-field-closed-form", 1e-8, [&](Worst& w) {
            VectorField xk = jacobi_hvf(ra.final_system);
            for (int k = 0; k < 100; ++k) {
              Point y = rng_.sample(ref.chart);
              w.feed(max_abs_diff(xk(y), (*suite_.reduced_field_closed)(y)),
                     y);
            }
          });
        }
      }
      if (suite_.k_quotient_b && suite_.reduced_b_index >= 0) {
        PipelineResult rb = pipeline_B(cp, *suite_.k_quotient_b);
        compare_jacobi("reduced-bracket-closed-form-B", rb.final_system,
                       suite_.jacobi_charts[suite_.reduced_b_index].system);
      }
      if (suite_.contact_field_closed && suite_.reduced_field_closed &&
          suite_.k_quotient_b) {
        check("reduced-field-pushforward", 1e-8, [&](Worst& w) {
          MatrixField jp = jacobian(suite_.k_quotient_b->project);
          for (int k = 0; k < 200; ++k) {
            Point z = rng_.sample(suite_.k_quotient_b->total);
            Point push = jp(z) * (*suite_.contact_field_closed)(z);
            Point down = (*suite_.reduced_field_closed)(
                suite_.k_quotient_b->project(z));
            w.feed(max_abs_diff(push, down), z);
          }
        });
      }
    }

    for (const auto& pres : suite_.poisson_presentations) {
      check("projection-commutation/" + pres.label, 1e-8, [&](Worst& w) {
        const ScalingBundle& pb = pres.bundle;
        MatrixField jp = jacobian(pb.quotient.project);
        for (int t = 0; t < 5; ++t) {
          ScalarField h_base = random_test_function(pb.quotient.base, rng_);
          ScalarField hom = section_to_hom(h_base, pb);
          PoissonSystem up{pres.system.chart, pres.system.pi, hom};
          VectorField x_up = poisson_hvf(up);
          JacobiSystem down = reduce_poisson_by_scaling(up, pb);
          VectorField x_down = jacobi_hvf(down);
          for (int k = 0; k < 20; ++k) {
            Point x = rng_.sample(pb.quotient.total);
            Point lhs = jp(x) * x_up(x);
            Point rhs = x_down(pb.quotient.project(x));
            w.feed(max_abs_diff(lhs, rhs), x);
          }
        }
      });
    }

    for (const auto& nj : suite_.jacobi_charts) {
      check("field-anti-homomorphism/" + nj.label, 1e-7, [&](Worst& w) {
        for (int t = 0; t < 5; ++t) {
          ScalarField h1 = random_test_function(nj.system.chart, rng_);
          ScalarField h2 = random_test_function(nj.system.chart, rng_);
          VectorField x1 = jacobi_hvf(nj.system, h1);
          VectorField x2 = jacobi_hvf(nj.system, h2);
          VectorField commutator = lie_bracket(x1, x2);
          VectorField x12 =
              jacobi_hvf(nj.system, jacobi_bracket(nj.system, h1, h2));
          for (int k = 0; k < 20; ++k) {
            Point y = rng_.sample(nj.system.chart);
            Point lhs = commutator(y);
            Point rhs = x12(y);
            double d = 0.0;
            for (size_t i = 0; i < lhs.size(); ++i)
              d = std::max(d, std::abs(lhs[i] + rhs[i]));
            w.feed(d, y);
          }
        }
      });
    }
  }

  // ---- two-orderings equivalence ---------------------------------------

  void equivalence() {
    if (suite_.pair && suite_.k_quotient_a && suite_.k_quotient_b) {
      const CompatiblePair& cp = *suite_.pair;
      check("pipeline-equivalence-fields", 1e-8, [&](Worst& w) {
        PipelineResult ra = pipeline_A(cp, *suite_.k_quotient_a);
        PipelineResult rb = pipeline_B(cp, *suite_.k_quotient_b);
        CoordMap psi =
            equivalence_psi(cp, *suite_.k_quotient_a, *suite_.k_quotient_b);
        VectorField xa = jacobi_hvf(ra.final_system);
        VectorField xb = jacobi_hvf(rb.final_system);
        MatrixField jpsi = jacobian(psi);
        for (int k = 0; k < 100; ++k) {
          Point y = rng_.sample(suite_.k_quotient_a->base);
          Point lhs = jpsi(y) * xa(y);
          Point rhs = xb(psi(y));
          w.feed(max_abs_diff(lhs, rhs), y);
        }
      });
      check("pipeline-equivalence-hamiltonians", 1e-8, [&](Worst& w) {
        PipelineResult ra = pipeline_A(cp, *suite_.k_quotient_a);
        PipelineResult rb = pipeline_B(cp, *suite_.k_quotient_b);
        CoordMap psi =
            equivalence_psi(cp, *suite_.k_quotient_a, *suite_.k_quotient_b);
        for (int k = 0; k < 100; ++k) {
          Point y = rng_.sample(suite_.k_quotient_a->base);
          w.feed(std::abs(ra.final_system.hamiltonian(y) -
                          rb.final_system.hamiltonian(psi(y))),
                 y);
        }
      });
    } else if (suite_.atlas && suite_.lie_section_locals &&
               suite_.reduced_a_index >= 0 && suite_.reduced_b_index >= 0 &&
               suite_.lie_poisson && suite_.lie_poisson->hamiltonian) {
      // The two generic reductions live on different atlas charts; they are
      // equivalent through the coordinate change and its conformal factor.
      const KirillovAtlas& at = *suite_.atlas;
      const AtlasTransition& tr =
          at.transition(suite_.reduced_a_index, suite_.reduced_b_index);
      const Chart& from_chart = at.charts[tr.from].chart;
      check("pipeline-equivalence-fields", 1e-8, [&](Worst& w) {
        auto locals = suite_.lie_section_locals({0.0, 0.0, 1.0});
        for (int k = 0; k < 100; ++k) {
          Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
          w.feed(symbol_overlap_residual(at, locals, tr.from, tr.to, y), y);
        }
      });
      check("pipeline-equivalence-hamiltonians", 1e-8, [&](Worst& w) {
        auto locals = suite_.lie_section_locals({0.0, 0.0, 1.0});
        for (int k = 0; k < 100; ++k) {
          Point y = sample_in_box(rng_, from_chart, tr.overlap_box);
          w.feed(section_transport_residual(at, locals, tr.from, tr.to, y),
                 y);
        }
      });
    }
  }

  // ---- reconstruction round trips --------------------------------------

  void reconstruction() {
    ScalarField energy;
    if (suite_.pair)
      energy = suite_.pair->system.hamiltonian;
    else if (suite_.lie_poisson)
      energy = suite_.lie_poisson->hamiltonian;
    if (energy) {
      check("energy-conservation", 1e-7, [&](Worst& w) {
        Trajectory tr =
            rk4_flow(suite_.full_field(), suite_.full_chart(),
                     suite_.default_x0, suite_.default_t0, suite_.default_t1,
                     suite_.default_dt);
        const double h0 = energy(suite_.default_x0);
        for (size_t i = 0; i < tr.size(); ++i)
          w.feed(std::abs(energy(tr.states[i]) - h0), {tr.times[i]});
      });
    }

    for (const auto& preset : suite_.reconstructions) {
      ReconstructedTrajectory rt;
      Trajectory direct;
      bool ok = true;
      try {
        rt = run_preset(preset, suite_.default_x0, suite_.default_t0,
                        suite_.default_t1, suite_.default_dt);
        direct = rk4_flow(preset.full_field, preset.bundle.quotient.total,
                          suite_.default_x0, suite_.default_t0,
                          suite_.default_t1, suite_.default_dt);
      } catch (const Error&) {
        ok = false;
      }

      check("reconstruction-roundtrip/" + preset.label, 1e-5, [&](Worst& w) {
        if (!ok) throw DomainError("reconstruction failed");
        if (rt.gamma.truncated || rt.total.truncated || direct.truncated)
          throw DomainError("trajectory left the chart");
        const Chart& total = preset.bundle.quotient.total;
        const size_t n = std::min(rt.total.size(), direct.size());
        if (n == 0) throw DomainError("empty trajectory");
        for (size_t i = 0; i < n; ++i)
          w.feed(total.distance(rt.total.states[i], direct.states[i]),
                 {rt.times[i]});
      });
      check("reconstruction-level-set/" + preset.label, 1e-8, [&](Worst& w) {
        if (!ok) throw DomainError("reconstruction failed");
        const double s0 = preset.bundle.scale(suite_.default_x0);
        for (size_t i = 0; i < rt.phi.size(); ++i)
          w.feed(std::abs(preset.bundle.scale(rt.phi.states[i]) - s0),
                 {rt.times[i]});
      });
      check("reconstruction-projection/" + preset.label, 1e-6, [&](Worst& w) {
        if (!ok) throw DomainError("reconstruction failed");
        const QuotientChart& q = preset.bundle.quotient;
        const size_t n = std::min(rt.total.size(), rt.gamma.size());
        for (size_t i = 0; i < n; ++i)
          w.feed(q.base.distance(q.project(rt.total.states[i]),
                                 rt.gamma.states[i]),
                 {rt.times[i]});
      });
      if (suite_.casimir) {
        check("casimir-drift/" + preset.label, 1e-7, [&](Worst& w) {
          if (!ok) throw DomainError("reconstruction failed");
          const double c0 = (*suite_.casimir)(suite_.default_x0);
          for (size_t i = 0; i < rt.total.size(); ++i)
            w.feed(std::abs((*suite_.casimir)(rt.total.states[i]) - c0),
                   {rt.times[i]});
        });
      }
    }
  }

  const ExampleSuite& suite_;
  const VerifyOptions& opt_;
  Sampler rng_;
  std::vector<CheckReport> reports_;
};

}  // namespace

std::vector<CheckReport> verify_suite(const ExampleSuite& suite,
                                      const VerifyOptions& opt) {
  return Battery(suite, opt).run();
}

}  // namespace gmred
