#include "alegeo/core/verify.hpp"

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/curvature.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/gluing.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/numerics.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/operators.hpp"
#include "alegeo/core/poisson.hpp"
#include "alegeo/core/sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

namespace alegeo {

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

std::vector<std::string> VerifyReport::failed() const {
  std::vector<std::string> out;
  for (const auto& p : properties)
    if (!p.passed) out.push_back(p.module + ": " + p.name);
  return out;
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(6) << "status" << std::setw(14) << "module" << std::setw(68)
     << "property" << "measured / threshold\n";
  for (const auto& p : properties) {
    std::ostringstream m;
    m << std::setprecision(4) << p.measured << ' ' << p.relation << ' ' << p.threshold;
    os << std::left << std::setw(6) << (p.passed ? "PASS" : "FAIL") << std::setw(14) << p.module
       << std::setw(68) << p.name << m.str();
    if (!p.detail.empty()) os << "  (" << p.detail << ')';
    os << '\n';
  }
  os << (all_passed() ? "all properties passed" : std::to_string(failed().size()) + " properties failed")
     << " (" << properties.size() << " checked)\n";
  return os.str();
}

MomentComparison compare_sphere_moments(int m, const Tensor4& closed_form, std::size_t samples,
                                        std::mt19937_64& rng) {
  require(closed_form.dim() == m, ErrorCode::DimensionMismatch, "moment tensor dimension");
  const MonteCarloMoments mc = monte_carlo_moment4(m, samples, rng);
  MomentComparison out;
  out.dim = m;
  // One representative per multiset of indices (a <= b <= c <= d).
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = b; c < m; ++c)
        for (int d = c; d < m; ++d) {
          ++out.patterns;
          const double diff = std::abs(mc.mean(a, b, c, d) - closed_form(a, b, c, d));
          const double se = mc.standard_error(a, b, c, d);
          const double sigma = se > 0.0 ? diff / se : (diff > 0.0 ? INFINITY : 0.0);
          out.max_sigma = std::max(out.max_sigma, sigma);
        }
  out.passed = out.max_sigma <= 3.0;
  return out;
}

namespace {

class Suite {
 public:
  explicit Suite(std::vector<PropertyResult>& out) : out_(out) {}

  void le(const std::string& module, const std::string& name, double measured, double threshold,
          const std::string& detail = {}) {
    out_.push_back({module, name, measured, threshold, "<=", measured <= threshold, detail});
  }
  void ge(const std::string& module, const std::string& name, double measured, double threshold,
          const std::string& detail = {}) {
    out_.push_back({module, name, measured, threshold, ">=", measured >= threshold, detail});
  }
  void holds(const std::string& module, const std::string& name, bool ok,
             const std::string& detail = {}) {
    out_.push_back({module, name, ok ? 1.0 : 0.0, 1.0, "==", ok, detail});
  }

  // Runs a group; an exception fails the named property instead of aborting the suite.
  template <class F>
  void group(const std::string& module, const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out_.push_back({module, name, NAN, 0.0, "==", false, std::string("exception: ") + e.what()});
    }
  }

 private:
  std::vector<PropertyResult>& out_;
};

// Deterministic unit directions in R^m.
std::vector<Vector> probe_directions(int m, int count) {
  std::vector<Vector> out;
  for (int k = 0; k < count; ++k) {
    Vector u(m);
    for (int i = 0; i < m; ++i) u(i) = std::sin(1.3 * (k + 1) * (i + 1) + 0.4);
    out.push_back(u / u.norm());
  }
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Conformally flat metric e^{2 phi} delta, phi = c exp(-|x|^2 / 2), with analytic jet.
std::shared_ptr<const MetricChart> conformal_test_chart(int m, double c) {
  auto jet = [m, c](const Vector& x) {
    const double phi = c * std::exp(-0.5 * x.squaredNorm());
    const double e = std::exp(2.0 * phi);
    const Matrix id = Matrix::Identity(m, m);
    MetricJet j;
    j.g = e * id;
    for (int k = 0; k < m; ++k) j.dg.push_back(2.0 * (-x(k) * phi) * e * id);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        const double pk = -x(k) * phi, pl = -x(l) * phi;
        const double pkl = (x(k) * x(l) - (k == l ? 1.0 : 0.0)) * phi;
        j.ddg.push_back((4.0 * pk * pl + 2.0 * pkl) * e * id);
      }
    return j;
  };
  return std::make_shared<FunctionChart>(
      m, [jet](const Vector& x) { return jet(x).g; }, [](const Vector&) { return true; }, jet);
}

OrbifoldPointData random_orbifold(int m, double mu, double weyl_scale, int group_order,
                                  std::mt19937_64& rng) {
  const WeylTensor w = m >= 4 ? WeylTensor::project(weyl_scale * random_weyl(m, rng))
                              : WeylTensor::zero(m);
  return orbifold_custom(m, mu, w, group_order);
}

AleInvariants with_weyl(AleInvariants inv, const WeylTensor& w) {
  inv.asymptotic_weyl = w;
  return inv;
}

OrbifoldPointData with_weyl(const OrbifoldPointData& d, const WeylTensor& w) {
  return orbifold_custom(d.dim, d.mu, w, d.group_order);
}

// ---------------------------------------------------------------- tensor-core
void tensor_core(Suite& s, std::mt19937_64& rng) {
  const std::string mod = "tensor-core";
  std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);
  const auto eh_chart = eh->chart();
  const auto hyp = hyperbolic_normal_chart(4, 5.0);
  const auto sph = stereographic_sphere_chart(3);
  const auto conf = conformal_test_chart(3, 0.3);

  s.group(mod, "curvature symmetries and first Bianchi (analytic charts)", [&] {
    double worst = 0.0;
    auto scan = [&](const MetricChart& c, std::initializer_list<double> radii) {
      for (double r : radii)
        for (const Vector& u : probe_directions(c.dim(), 3))
          worst = std::max(worst, curvature_symmetry_residuals(riemann(c, r * u)).max());
    };
    scan(*eh_chart, {2.0, 4.0, 8.0});
    scan(*hyp, {0.05, 0.5, 2.0});
    scan(*sph, {0.3, 1.0, 2.0});
    scan(*conf, {0.3, 1.0, 2.0});
    s.le(mod, "curvature symmetries and first Bianchi (analytic charts)", worst, 1e-9);
  });

  s.group(mod, "curvature symmetries and first Bianchi (finite-difference charts)", [&] {
    double worst = 0.0;
    const FiniteDifferenceChart fd_eh(eh_chart), fd_hyp(hyp);
    for (const Vector& u : probe_directions(4, 3)) {
      worst = std::max(worst, curvature_symmetry_residuals(riemann(fd_eh, 2.0 * u)).max());
      worst = std::max(worst, curvature_symmetry_residuals(riemann(fd_hyp, 0.7 * u)).max());
    }
    s.le(mod, "curvature symmetries and first Bianchi (finite-difference charts)", worst, 1e-6);
  });

  s.group(mod, "contracted second Bianchi B(Ric) = 0", [&] {
    double worst = 0.0;
    auto scan = [&](std::shared_ptr<const MetricChart> c, std::initializer_list<double> radii) {
      const FunctionSym2Field ric(c->dim(), [c](const Vector& x) {
        const Connection k = connection(*c, x);
        return ricci(riemann(k), k.g);
      });
      for (double r : radii)
        for (const Vector& u : probe_directions(c->dim(), 2)) {
          const Vector x = r * u;
          const double scale = std::max(1.0, max_abs(ric.value(x)));
          worst = std::max(worst, bianchi_op(*c, ric, x).cwiseAbs().maxCoeff() / scale);
        }
    };
    scan(conf, {0.5, 1.0, 1.5});
    scan(eh_chart, {2.0, 4.0});
    scan(hyp, {0.5, 1.5});
    s.le(mod, "contracted second Bianchi B(Ric) = 0", worst, 1e-6);
  });

  s.group(mod, "weyl_decompose: trace-free and exact reconstruction", [&] {
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
      const int m = 4 + k % 2;
      std::uniform_real_distribution<double> u(-3.0, 3.0);
      const double mu = u(rng);
      const WeylTensor w = WeylTensor::project(u(rng) * random_weyl(m, rng));
      const Matrix id = Matrix::Identity(m, m);
      const Tensor4 r = einstein_curvature(w, id, mu);
      const WeylTensor back = weyl_decompose(r, id, mu);
      worst = std::max(worst, trace_residual(back.tensor(), id));
      worst = std::max(worst, (einstein_curvature(back, id, mu) - r).norm() / r.norm());
    }
    s.le(mod, "weyl_decompose: trace-free and exact reconstruction", worst, 1e-12);
  });

  s.group(mod, "Eguchi-Hanson curvature is Weyl (mu = 0)", [&] {
    double worst = 0.0;
    for (const Vector& u : probe_directions(4, 3)) {
      const Connection c = connection(*eh_chart, 3.0 * u);
      const Tensor4 r = riemann(c);
      const WeylTensor w = weyl_decompose(r, c.g, 0.0);
      worst = std::max(worst, trace_residual(w.tensor(), c.g_inv));
    }
    s.le(mod, "Eguchi-Hanson curvature is Weyl (mu = 0)", worst, 1e-9);
  });

  const QuadraticTensorH h_field = build_H(random_orbifold(4, -2.0, 1.5, 2, rng));

  s.group(mod, "bianchi_op = divergence + 1/2 d trace", [&] {
    double worst = 0.0;
    for (double r : {2.0, 5.0})
      for (const Vector& u : probe_directions(4, 3)) {
        const Vector x = r * u;
        const MetricJet j = eh_chart->checked_jet(x);
        const Connection c = connection(j);
        const Vector b = bianchi_op(*eh_chart, h_field, x);
        const Vector d = divergence(*eh_chart, h_field, x);
        const Vector gt = trace_gradient(c, j, h_field.jet(x, 1));
        const double scale = std::max({1.0, b.cwiseAbs().maxCoeff(), d.cwiseAbs().maxCoeff()});
        worst = std::max(worst, (b - d - 0.5 * gt).cwiseAbs().maxCoeff() / scale);
      }
    s.le(mod, "bianchi_op = divergence + 1/2 d trace", worst, 1e-12);
  });

  s.group(mod, "P(g) = -Ric = -mu g on Einstein charts", [&] {
    double worst = 0.0;
    const MetricField gh(hyp), gs(sph);
    for (const Vector& u : probe_directions(4, 3)) {
      const Vector x = 0.8 * u;
      worst = std::max(worst, max_abs(apply_P(*hyp, gh, x) - 3.0 * hyp->metric(x)) / 3.0);
    }
    for (const Vector& u : probe_directions(3, 3)) {
      const Vector x = 0.8 * u;
      worst = std::max(worst, max_abs(apply_P(*sph, gs, x) + 2.0 * sph->metric(x)) / 2.0);
    }
    s.le(mod, "P(g) = -Ric = -mu g on Einstein charts", worst, 1e-6);
  });

  s.group(mod, "analytic vs finite-difference first-order operators", [&] {
    const FiniteDifferenceChart fd(eh_chart);
    const FiniteDifferenceField h_fd(h_field);
    double worst = 0.0;
    for (double r : {2.0, 4.0, 8.0})
      for (const Vector& u : probe_directions(4, 2)) {
        const Vector x = r * u;
        const Tensor3 ga = christoffel(*eh_chart, x), gf = christoffel(fd, x);
        double gmax = 0.0, gdiff = 0.0;
        for (int k = 0; k < 4; ++k)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              gmax = std::max(gmax, std::abs(ga(k, i, j)));
              gdiff = std::max(gdiff, std::abs(ga(k, i, j) - gf(k, i, j)));
            }
        worst = std::max(worst, gdiff / gmax);
        const double hs = max_abs(h_field.value(x)) / r;
        worst = std::max(worst, (divergence(*eh_chart, h_field, x) - divergence(fd, h_fd, x))
                                        .cwiseAbs().maxCoeff() / hs);
        worst = std::max(worst, (bianchi_op(*eh_chart, h_field, x) - bianchi_op(fd, h_fd, x))
                                        .cwiseAbs().maxCoeff() / hs);
        worst = std::max(worst, std::abs(trace(*eh_chart, h_field, x) - trace(fd, h_fd, x)) / (hs * r));
      }
    s.le(mod, "analytic vs finite-difference first-order operators", worst, 1e-6);
  });

  s.group(mod, "analytic metric derivatives match finite differences", [&] {
    double worst = 0.0;
    auto scan = [&](const MetricChart& c, double r) {
      for (const Vector& u : probe_directions(c.dim(), 2)) {
        const Vector x = r * u;
        const MetricJet a = c.jet(x), f = finite_difference_jet(c, x);
        double scale = 0.0, diff = 0.0;
        for (std::size_t k = 0; k < a.dg.size(); ++k) {
          scale = std::max(scale, max_abs(a.dg[k]));
          diff = std::max(diff, max_abs(a.dg[k] - f.dg[k]));
        }
        for (std::size_t k = 0; k < a.ddg.size(); ++k) {
          scale = std::max(scale, max_abs(a.ddg[k]));
          diff = std::max(diff, max_abs(a.ddg[k] - f.ddg[k]));
        }
        worst = std::max(worst, diff / scale);
      }
    };
    scan(*eh_chart, 2.0);
    scan(*eh_chart, 6.0);
    scan(*hyp, 1.0);
    scan(*sph, 0.7);
    s.le(mod, "analytic metric derivatives match finite differences", worst, 1e-6);
  });

  s.group(mod, "christoffel on the polar chart", [&] {
    const auto polar = surface_of_revolution_chart([](const Jet2& r) { return r; }, 0.1, 10.0);
    Vector x(2);
    x << 2.0, 0.0;
    const Tensor3 g = christoffel(*polar, x);
    double err = std::max(std::abs(g(0, 1, 1) + 2.0), std::abs(g(1, 0, 1) - 0.5));
    err = std::max({err, std::abs(g(1, 1, 0) - 0.5), std::abs(g(0, 0, 0)), std::abs(g(0, 0, 1)),
                    std::abs(g(1, 0, 0)), std::abs(g(1, 1, 1))});
    s.le(mod, "christoffel on the polar chart", err, 1e-10);
  });

  s.group(mod, "sectional curvature -1 on the hyperbolic surface", [&] {
    const auto hs = surface_of_revolution_chart([](const Jet2& r) { return sinh(r); }, 0.1, 5.0);
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0, 3.0}) {
      Vector x(2);
      x << r, 0.3;
      const Connection c = connection(*hs, x);
      const Tensor4 R = riemann(c);
      worst = std::max(worst, std::abs(R(0, 1, 0, 1) / c.g.determinant() + 1.0));
    }
    s.le(mod, "sectional curvature -1 on the hyperbolic surface", worst, 1e-8);
  });

  s.group(mod, "constant-curvature Ricci tensors", [&] {
    double worst = 0.0;
    const auto s2 = stereographic_sphere_chart(2);
    for (const Vector& u : probe_directions(2, 3)) {
      const Connection c = connection(*s2, 0.9 * u);
      const Matrix ric = ricci(riemann(c), c.g);
      worst = std::max(worst, max_abs(ric - c.g));
      worst = std::max(worst, std::abs(scalar_curvature(ric, c.g) - 2.0));
    }
    for (const Vector& u : probe_directions(4, 3)) {
      const Connection c = connection(*hyp, 1.2 * u);
      worst = std::max(worst, max_abs(ricci(riemann(c), c.g) + 3.0 * c.g));
    }
    s.le(mod, "constant-curvature Ricci tensors", worst, 1e-8);
  });

  s.group(mod, "metric is parallel: delta g = 0, tr g = m, B g = 0", [&] {
    const MetricField g(eh_chart);
    double worst = 0.0;
    for (const Vector& u : probe_directions(4, 3)) {
      const Vector x = 2.5 * u;
      worst = std::max(worst, divergence(*eh_chart, g, x).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(trace(*eh_chart, g, x) - 4.0));
      worst = std::max(worst, bianchi_op(*eh_chart, g, x).cwiseAbs().maxCoeff());
    }
    s.le(mod, "metric is parallel: delta g = 0, tr g = m, B g = 0", worst, 1e-9);
  });

  s.group(mod, "delta* d|x|^2 = 2 id and P of harmonic entries = 0", [&] {
    const EuclideanChart flat(4);
    const CovectorField du(4, [](const Vector& x) { return Vector(2.0 * x); },
                           [](const Vector&) { return Matrix(2.0 * Matrix::Identity(4, 4)); });
    std::normal_distribution<double> nd(0.0, 1.0);
    Matrix c(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) c(i, j) = c(j, i) = nd(rng);
    const FunctionSym2Field harm(4, [c](const Vector& x) { return Matrix((x(0) * x(1) + x(2)) * c); });
    double worst = 0.0;
    for (const Vector& u : probe_directions(4, 3)) {
      const Vector x = 1.7 * u;
      worst = std::max(worst, max_abs(delta_star(flat, du, x) - 2.0 * Matrix::Identity(4, 4)));
      worst = std::max(worst, max_abs(apply_P(flat, harm, x)));
    }
    s.le(mod, "delta* d|x|^2 = 2 id and P of harmonic entries = 0", worst, 1e-8);
  });

  s.group(mod, "degenerate metrics are rejected", [&] {
    const FunctionChart bad(
        2, [](const Vector&) { return Matrix(Vector(Eigen::Vector2d(1.0, 1e-13)).asDiagonal()); },
        [](const Vector&) { return true; });
    bool rejected = false;
    try {
      bad.checked_metric(Vector::Ones(2));
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::SingularMetric;
    }
    s.holds(mod, "degenerate metrics are rejected", rejected);
  });
}

// ---------------------------------------------------------------- ale-models
void ale_models(Suite& s, std::mt19937_64& rng) {
  const std::string mod = "ale-models";
  std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);
  s.group(mod, "Ricci-flat at 5 radii", [&] {
    const double r_eh = ricci_residual(*eh, log_space(2.0, 32.0, 5));
    const double r_flat = ricci_residual(*model_flat_cone(4, 2), log_space(2.0, 32.0, 5));
    s.le(mod, "Ricci-flat at 5 radii", std::max(r_eh, r_flat), 1e-7);
  });
  s.group(mod, "flat volume density integrates to the closed-form volume", [&] {
    double worst = 0.0;
    for (auto [m, g] : {std::pair{4, 2}, std::pair{3, 1}, std::pair{5, 3}}) {
      const auto f = model_flat_cone(m, g);
      const double R = 3.0;
      const double v = integrate([&](double r) { return f->volume_density(r); }, 0.0, R, 1e-14);
      worst = std::max(worst, rel(v, sphere_area(m) * std::pow(R, m) / (m * g)));
    }
    s.le(mod, "flat volume density integrates to the closed-form volume", worst, 1e-12);
  });
  s.group(mod, "flat volume density examples", [&] {
    const double a = rel(model_flat_cone(3, 1)->volume_density(2.0), 16.0 * M_PI);
    const double b = rel(model_flat_cone(4, 5)->volume_density(1.0), 2.0 * M_PI * M_PI / 5.0);
    s.le(mod, "flat volume density examples", std::max(a, b), 1e-14);
  });
  s.group(mod, "Eguchi-Hanson r^4 |g - delta| Cauchy between 32 and 64", [&] {
    const auto c = eh->chart();
    auto amp = [&](double r) {
      double a = 0.0;
      for (const Vector& u : probe_directions(4, 6)) a = std::max(a, max_abs(c->deviation(r * u)));
      return a * std::pow(r, 4);
    };
    s.le(mod, "Eguchi-Hanson r^4 |g - delta| Cauchy between 32 and 64", rel(amp(32.0), amp(64.0)), 0.02);
  });
  s.group(mod, "ALE decay exponent of Eguchi-Hanson", [&] {
    const double tau = ale_decay_exponent(*eh, {8.0, 16.0, 32.0, 64.0});
    s.le(mod, "ALE decay exponent of Eguchi-Hanson", std::abs(tau - 4.0), 0.3,
         "tau = " + std::to_string(tau));
  });
  s.group(mod, "Eguchi-Hanson volume density / r^3 -> area / |Gamma|", [&] {
    s.le(mod, "Eguchi-Hanson volume density / r^3 -> area / |Gamma|",
         rel(eh->volume_density(64.0) / std::pow(64.0, 3), M_PI * M_PI), 0.01);
  });
  s.group(mod, "orbifold data is Einstein", [&] {
    double worst = 0.0;
    for (int m : {3, 4, 5}) worst = std::max(worst, einstein_residual(orbifold_hyperbolic(m, 2)));
    for (int m : {4, 5}) worst = std::max(worst, einstein_residual(random_orbifold(m, -1.7, 2.0, 1, rng)));
    s.le(mod, "orbifold data is Einstein", worst, 1e-9);
  });
  s.group(mod, "orbifold Weyl round trip", [&] {
    const auto hyp = orbifold_hyperbolic(4, 2);
    double worst = weyl_decompose(hyp.curvature, Matrix::Identity(4, 4), -3.0).norm();
    const auto d = random_orbifold(5, -2.5, 1.0, 1, rng);
    worst = std::max(worst, (weyl_decompose(d.curvature, Matrix::Identity(5, 5), d.mu).tensor() -
                             d.weyl.tensor()).norm() / d.weyl.norm());
    s.le(mod, "orbifold Weyl round trip", worst, 1e-12);
  });
}

// ------------------------------------------------ asymptotics and poisson
struct EhRuns {
  std::map<double, AleInvariants> inv;
  std::map<double, std::shared_ptr<const RadialPoissonSolution>> sol;
};

void asymptotics(Suite& s, EhRuns& runs, bool quick) {
  const std::string mod = "asymptotics";
  const std::vector<double> scales = quick ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  for (double a : scales) {
    s.group(mod, "invariants of Eguchi-Hanson a = " + std::to_string(a), [&] {
      std::shared_ptr<const RadialAleModel> m = model_eguchi_hanson(a);
      runs.inv[a] = compute_invariants(*m, default_schedule(*m));
      runs.sol[a] = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(m));
    });
  }
  if (!runs.inv.count(1.0)) return;
  const AleInvariants& inv = runs.inv.at(1.0);

  s.ge(mod, "Eguchi-Hanson V negative beyond 10x its error",
       -inv.renormalized_volume / std::max(inv.volume_error, 1e-300), 10.0,
       "V = " + std::to_string(inv.renormalized_volume));
  {
    const auto rows = inv.volume_table.rows;
    const double last = rows.back().extrapolated, prev = rows[rows.size() - 2].extrapolated;
    s.le(mod, "Eguchi-Hanson V Cauchy between the last two extrapolants", rel(prev, last), 1e-3);
  }
  s.group(mod, "flat cone V = 0 and W = 0", [&] {
    double worst = 0.0;
    for (auto [m, g] : {std::pair{4, 2}, std::pair{3, 1}, std::pair{5, 2}}) {
      const auto f = model_flat_cone(m, g);
      const AleInvariants fi = compute_invariants(*f, default_schedule(*f));
      worst = std::max({worst, std::abs(fi.renormalized_volume), fi.asymptotic_weyl.norm()});
    }
    s.le(mod, "flat cone V = 0 and W = 0", worst, 1e-12);
  });
  {
    const Tensor4& w = inv.asymptotic_weyl.tensor();
    const double res = std::max(curvature_symmetry_residuals(w).max(),
                                trace_residual(w, Matrix::Identity(4, 4)));
    s.le(mod, "W_inf exactly Weyl after projection", res, 1e-12);
    s.le(mod, "W_inf gauge residual (projection change)", inv.gauge_residual, 0.05);
  }
  s.group(mod, "volume deficit converges like r^-4", [&] {
    std::shared_ptr<const RadialAleModel> m = model_eguchi_hanson(1.0);
    std::vector<double> radii = default_schedule(*m), err;
    for (double r : radii) err.push_back(volume_deficit(*m, r) - inv.renormalized_volume);
    const double slope = loglog_slope(radii, err);
    s.le(mod, "volume deficit converges like r^-4", std::abs(slope + 4.0), 0.5,
         "slope = " + std::to_string(slope));
  });
  s.group(mod, "convergence-table errors non-increasing", [&] {
    bool ok = true;
    for (const ConvergenceTable* t : {&inv.volume_table, &inv.weyl_table})
      for (std::size_t k = 1; k < t->rows.size(); ++k)
        ok = ok && t->rows[k].err_estimate <= t->rows[k - 1].err_estimate;
    s.holds(mod, "convergence-table errors non-increasing", ok);
  });
  for (const auto& [a, sol] : runs.sol) {
    const double v_poisson = poisson_volume(sol->model(), *sol);
    const double v_direct = runs.inv.at(a).renormalized_volume;
    s.le(mod, "two-route V agreement, a = " + std::to_string(a), rel(v_poisson, v_direct), 5e-3);
    s.holds(mod, "both V routes negative, a = " + std::to_string(a), v_poisson < 0.0 && v_direct < 0.0);
  }
  s.group(mod, "scaling of V and |W_inf| under a -> 1.5a", [&] {
    const ScaleInvarianceReport r = scale_invariance_check(*model_eguchi_hanson(1.0), 1.5);
    s.le(mod, "V scales as a^4", r.volume_ratio_error, 1e-3);
    s.le(mod, "|W_inf| scales as a^4", r.weyl_ratio_error, 1e-2);
  });
}

void poisson(Suite& s, EhRuns& runs, bool quick) {
  const std::string mod = "poisson";
  if (!runs.sol.count(1.0)) return;
  const auto sol = runs.sol.at(1.0);
  const RadialAleModel& eh = sol->model();
  const int m = 4;

  s.group(mod, "Laplacian residual at 7 radii", [&] {
    double worst = 0.0;
    std::shared_ptr<const RadialAleModel> flat = model_flat_cone(4, 2);
    const RadialPoissonSolution fsol = solve_poisson_radial(flat);
    for (double r : log_space(1.25, 64.0, 7))
      for (const Vector& u : probe_directions(4, 2)) {
        worst = std::max(worst, std::abs(sol->laplacian_residual(r * u)));
        worst = std::max(worst, std::abs(fsol.laplacian_residual(r * u)));
      }
    s.le(mod, "Laplacian residual at 7 radii", worst, 1e-8);
    s.holds(mod, "flat cone: b = 0 and u = r^2",
            fsol.b_coeff() == 0.0 && poisson_volume(*flat, fsol) == 0.0);
  });
  s.group(mod, "deformation is trace-free, divergence-free and in ker P", [&] {
    const DeformationField o(sol);
    const auto c = eh.chart();
    double tr = 0.0, dv = 0.0, pp = 0.0;
    for (double r : {2.0, 4.0, 8.0})
      for (const Vector& u : probe_directions(4, 3)) {
        const Vector x = r * u;
        tr = std::max(tr, std::abs(trace(*c, o, x)) / tensor_norm(o.value(x), c->metric(x).inverse()));
        dv = std::max(dv, divergence(*c, o, x).cwiseAbs().maxCoeff());
        pp = std::max(pp, max_abs(apply_P(*c, o, x)));
      }
    s.le(mod, "deformation trace relative to its norm", tr, 1e-8);
    s.le(mod, "deformation divergence", dv, 1e-5);
    s.le(mod, "deformation P residual", pp, 1e-5);
  });
  s.holds(mod, "b > 0 (so that V < 0 for m = 4)", sol->b_coeff() > 0.0,
          "b = " + std::to_string(sol->b_coeff()));
  {
    const auto& last = sol->samples().back();
    const double dev = std::abs(last.u - last.r * last.r);
    s.le(mod, "|u - r^2| <= 2|b| r^{2-m} at the outer radius",
         dev / (2.0 * std::abs(sol->b_coeff()) * std::pow(last.r, 2 - m)), 1.0);
  }
  if (runs.sol.count(2.0))
    s.le(mod, "b scales as a^4", rel(runs.sol.at(2.0)->b_coeff(), 16.0 * sol->b_coeff()), 5e-3);
  {
    bool ok = true;
    for (const auto& [a, x] : runs.sol) ok = ok && poisson_volume(x->model(), *x) <= 0.0;
    s.holds(mod, "Poisson V <= 0 for every built-in", ok);
  }
  s.group(mod, "expansion blocks of the deformation", [&] {
    const ExplicitDeformation d = explicit_deformation(sol, default_schedule(eh));
    const AleInvariants& inv = runs.inv.at(1.0);
    const double expect_v = -4.0 * m * eh.group_order() / sphere_area(m) * inv.renormalized_volume;
    s.le(mod, "volume block = -4m (|Gamma|/omega) V", rel(d.volume_block, expect_v), 1e-2);
    const Tensor4& wi = inv.asymptotic_weyl.tensor();
    const double target = -2.0 * m;
    const double by_dot = contract(d.weyl_block.tensor(), wi) / contract(wi, wi);
    const double by_norm = -d.weyl_block.norm() / inv.asymptotic_weyl.norm();
    s.le(mod, "Weyl block = -2m W_inf (rotation-invariant contractions)",
         std::max(rel(by_dot, target), rel(by_norm, target)), 2e-2);
    s.le(mod, "expansion remainder decays faster than r^-m (slope)", d.residual_slope, -0.5);
    s.le(mod, "L2 norm of the deformation", rel(d.l2_norm, 4.0 * M_PI), 1e-6);
    std::shared_ptr<const RadialAleModel> flat = model_flat_cone(4, 2);
    const auto fsol = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(flat));
    const ExplicitDeformation fd = explicit_deformation(fsol, default_schedule(*flat));
    double fmax = 0.0;
    for (const Vector& u : probe_directions(4, 3)) fmax = std::max(fmax, max_abs(fd.field->value(3.0 * u)));
    s.le(mod, "flat cone deformation vanishes", fmax, 0.0);
  });
  if (!quick && runs.sol.count(2.0)) {
    s.group(mod, "pairing and L2 norm scale consistently under a -> 2a", [&] {
      const OrbifoldPointData hyp = orbifold_hyperbolic(4, 2);
      const QuadraticTensorH h = build_H(hyp);
      double pair[2], closed[2], l2[2];
      int k = 0;
      for (double a : {1.0, 2.0}) {
        const auto sa = runs.sol.at(a);
        const ExplicitDeformation d = explicit_deformation(sa, default_schedule(sa->model()));
        pair[k] = lambda_pairing(sa->model(), h, *d.field, default_schedule(sa->model())).value;
        closed[k] = lambda0_closed_form(hyp, runs.inv.at(a));
        l2[k] = d.l2_norm;
        ++k;
      }
      s.le(mod, "pairing ratio matches the closed-form ratio", rel(pair[1] / pair[0], closed[1] / closed[0]), 1e-2);
      s.le(mod, "L2 norm ratio = 2^{m/2}", rel(l2[1] / l2[0], 4.0), 1e-2);
    });
  }
}

// ---------------------------------------------------------------- obstruction
void obstruction(Suite& s, EhRuns& runs, const VerifyOptions& opt, std::mt19937_64& rng) {
  const std::string mod = "obstruction";
  s.group(mod, "H identities for 100 random data", [&] {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 100; ++k) {
      const int m = 3 + k % 3;
      const OrbifoldPointData d = random_orbifold(m, u(rng), u(rng), 1, rng);
      const QuadraticTensorH h = build_H(d);
      Vector x(m);
      for (int i = 0; i < m; ++i) x(i) = u(rng);
      worst = std::max(worst, h_residuals(h, x).max());
    }
    s.le(mod, "H identities for 100 random data", worst, 1e-9);
  });
  s.group(mod, "hyperbolic H has trace 3|x|^2", [&] {
    const QuadraticTensorH h = build_H(orbifold_hyperbolic(4, 2));
    double worst = 0.0;
    for (const Vector& u : probe_directions(4, 3)) {
      const Vector x = 1.9 * u;
      worst = std::max(worst, std::abs(h.value(x).trace() - 3.0 * x.squaredNorm()));
    }
    s.le(mod, "hyperbolic H has trace 3|x|^2", worst, 1e-12);
  });
  auto moments = opt.sphere_moments ? opt.sphere_moments : [](int m) { return sphere_moment4(m); };
  s.group(mod, "sphere moments closed-form examples", [&] {
    const Tensor4 m3 = moments(3), m4 = moments(4);
    double err = rel(m3(0, 0, 0, 0), 4.0 * M_PI / 5.0);
    err = std::max(err, rel(m4(0, 0, 1, 1), M_PI * M_PI / 12.0));
    err = std::max({err, std::abs(m3(0, 0, 0, 1)), std::abs(m4(0, 1, 2, 2))});
    s.le(mod, "sphere moments closed-form examples", err, 1e-14);
  });
  for (int m : {3, 4, 5}) {
    s.group(mod, "sphere moments vs Monte Carlo, m = " + std::to_string(m), [&] {
      const MomentComparison c = compare_sphere_moments(m, moments(m), opt.mc_samples, rng);
      s.le(mod, "sphere moments vs Monte Carlo, m = " + std::to_string(m), c.max_sigma, 3.0,
           std::to_string(c.patterns) + " patterns, " + std::to_string(opt.mc_samples) + " samples");
    });
  }
  if (!runs.inv.count(1.0) || !runs.sol.count(1.0)) return;
  const AleInvariants& inv = runs.inv.at(1.0);
  const auto sol = runs.sol.at(1.0);
  const RadialAleModel& eh = sol->model();

  s.group(mod, "two-route lambda0 agreement", [&] {
    const ExplicitDeformation d = explicit_deformation(sol, default_schedule(eh));
    std::vector<OrbifoldPointData> data{orbifold_hyperbolic(4, 2)};
    std::uniform_real_distribution<double> u(0.5, 3.0);
    const int extra = opt.quick ? 1 : 3;
    for (int k = 0; k < extra; ++k) data.push_back(random_orbifold(4, -u(rng), 5.0 * u(rng), 2, rng));
    double worst = 0.0;
    for (const auto& dat : data) {
      const PairingResult p = lambda_pairing(eh, build_H(dat), *d.field, default_schedule(eh));
      worst = std::max(worst, rel(p.value, lambda0_closed_form(dat, inv)));
    }
    s.le(mod, "two-route lambda0 agreement", worst, 1e-2, std::to_string(data.size()) + " data sets");
  });
  s.group(mod, "obstruction of hyperbolic data with the Eguchi-Hanson bubble", [&] {
    const ObstructionReport r = obstruction_value(orbifold_hyperbolic(4, 2), inv);
    s.le(mod, "value = -(m-1) V", rel(r.value, -3.0 * inv.renormalized_volume), 1e-6);
    s.holds(mod, "verdict obstructed", r.verdict == Verdict::Obstructed, to_string(r.verdict));
  });
  s.group(mod, "flat bubble is unobstructed", [&] {
    const auto f = model_flat_cone(4, 2);
    const AleInvariants fi = compute_invariants(*f, default_schedule(*f));
    const ObstructionReport r = obstruction_value(random_orbifold(4, -3.0, 1.0, 2, rng), fi);
    s.holds(mod, "flat bubble is unobstructed", r.value == 0.0 && r.verdict == Verdict::Unobstructed);
  });
  s.group(mod, "simultaneous rotation invariance", [&] {
    const OrbifoldPointData d = random_orbifold(4, -2.0, 3.0, 2, rng);
    const double v0 = obstruction_value(d, inv).value;
    double drift = 0.0, change = 0.0;
    for (int k = 0; k < 5; ++k) {
      const Matrix a = random_orthogonal(4, rng), b = random_orthogonal(4, rng);
      const double v = obstruction_value(with_weyl(d, d.weyl.rotated(a)),
                                         with_weyl(inv, inv.asymptotic_weyl.rotated(a))).value;
      drift = std::max(drift, rel(v, v0));
      const double c0 = obstruction_value(d, inv).contraction;
      const double ci = obstruction_value(with_weyl(d, d.weyl.rotated(a)),
                                          with_weyl(inv, inv.asymptotic_weyl.rotated(b))).contraction;
      change = std::max(change, rel(ci, c0));
    }
    s.le(mod, "simultaneous rotation invariance", drift, 1e-10);
    s.ge(mod, "independent rotations change the contraction", change, 1e-3);
  });
  s.group(mod, "linearity and bilinearity of lambda0", [&] {
    const OrbifoldPointData a = random_orbifold(4, -1.3, 2.0, 2, rng);
    const OrbifoldPointData b = random_orbifold(4, -1.3, 2.0, 2, rng);
    const OrbifoldPointData zero = orbifold_custom(4, -1.3, WeylTensor::zero(4), 2);
    const OrbifoldPointData sum = with_weyl(a, a.weyl + b.weyl);
    const double f0 = lambda0_closed_form(zero, inv);
    const double lhs = lambda0_closed_form(sum, inv) - f0;
    const double rhs = (lambda0_closed_form(a, inv) - f0) + (lambda0_closed_form(b, inv) - f0);
    double worst = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    // Linear in W_inf for fixed W0 (V fixed).
    const WeylTensor w2 = WeylTensor::project(random_weyl(4, rng));
    const AleInvariants inv_sum = with_weyl(inv, inv.asymptotic_weyl + w2);
    const AleInvariants inv_zero = with_weyl(inv, WeylTensor::zero(4));
    const double g0 = lambda0_closed_form(a, inv_zero);
    const double l2 = lambda0_closed_form(a, inv_sum) - g0;
    const double r2 = (lambda0_closed_form(a, inv) - g0) + (lambda0_closed_form(a, with_weyl(inv, w2)) - g0);
    worst = std::max(worst, std::abs(l2 - r2) / std::max(std::abs(l2), std::abs(r2)));
    // Linear in mu for W0 = 0.
    const auto m1 = orbifold_custom(4, -1.0, WeylTensor::zero(4), 2);
    const auto m2 = orbifold_custom(4, -2.5, WeylTensor::zero(4), 2);
    const auto m12 = orbifold_custom(4, -3.5, WeylTensor::zero(4), 2);
    const double s12 = lambda0_closed_form(m1, inv) + lambda0_closed_form(m2, inv);
    worst = std::max(worst, rel(lambda0_closed_form(m12, inv), s12));
    s.le(mod, "linearity and bilinearity of lambda0", worst, 1e-12);
  });
  s.group(mod, "value = -lambda0 / (2m(m-2))", [&] {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const ObstructionReport r = obstruction_value(random_orbifold(4, -0.5 - k, 2.0, 2, rng), inv);
      worst = std::max(worst, rel(r.value, -r.lambda0_closed / 16.0));
    }
    s.le(mod, "value = -lambda0 / (2m(m-2))", worst, 1e-13);
  });
  s.group(mod, "invalid obstruction inputs are rejected", [&] {
    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return static_cast<int>(e.code());
      }
      return -1;
    };
    bool ok = code_of([&] { obstruction_value(orbifold_custom(4, 0.0, WeylTensor::zero(4), 2), inv); }) ==
              static_cast<int>(ErrorCode::PositiveEinsteinConstant);
    ok = ok && code_of([&] { obstruction_value(orbifold_custom(4, 1.0, WeylTensor::zero(4), 2), inv); }) ==
                   static_cast<int>(ErrorCode::PositiveEinsteinConstant);
    ok = ok && code_of([&] { lambda0_closed_form(orbifold_hyperbolic(5, 2), inv); }) ==
                   static_cast<int>(ErrorCode::DimensionMismatch);
    ok = ok && code_of([&] { lambda0_closed_form(orbifold_hyperbolic(4, 3), inv); }) ==
                   static_cast<int>(ErrorCode::GroupMismatch);
    s.holds(mod, "invalid obstruction inputs are rejected", ok);
  });
}

// ---------------------------------------------------------------- gluing
void gluing(Suite& s, std::mt19937_64& rng) {
  const std::string mod = "gluing";
  std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);
  const OrbifoldPointData hyp = orbifold_hyperbolic(4, 2);
  const GluedGeometry g(eh, orbifold_chart(hyp, 1.0), 0.1);

  s.group(mod, "radius function continuous across both seams", [&] {
    double jump = 0.0;
    for (const Vector& u : probe_directions(4, 5)) {
      const GluedPoint b{Region::Bubble, u / g.delta()}, n{Region::Neck, (g.t() / g.delta()) * u};
      const GluedPoint n2{Region::Neck, g.delta() * u}, o{Region::Orbifold, g.delta() * u};
      jump = std::max(jump, std::abs(radius_function(g, b) - radius_function(g, n)) / g.inner_seam());
      jump = std::max(jump, std::abs(radius_function(g, n2) - radius_function(g, o)) / g.outer_seam());
    }
    s.le(mod, "radius function continuous across both seams", jump, 1e-12);
  });
  s.group(mod, "glued metric positive definite for delta sweep", [&] {
    double worst = INFINITY;
    const auto flat = std::shared_ptr<const RadialAleModel>(model_flat_cone(4, 2));
    const OrbifoldPointData custom = random_orbifold(4, -3.0, 1.0, 2, rng);
    const SphereGrid dirs = make_sphere_grid(4, 4, 8);
    for (double delta : {0.2, 0.1, 0.05, 0.02, 0.01}) {
      const GluedGeometry ge(eh, orbifold_chart(hyp, 1.0), delta);
      const GluedGeometry gf(flat, orbifold_chart(custom, 1.0), delta);
      for (const GluedGeometry* geo : {&ge, &gf})
        for (const GluedPoint& p : geo->sample_points(48, dirs)) {
          Matrix gm = gluing_metric(*geo, p);
          if (p.region == Region::Bubble) gm /= geo->t() * geo->t();
          worst = std::min(worst, Eigen::SelfAdjointEigenSolver<Matrix>(gm).eigenvalues()(0));
        }
    }
    s.ge(mod, "glued metric positive definite for delta sweep", worst, 1e-300,
         "smallest eigenvalue (bubble points divided by t^2)");
  });
  s.group(mod, "cutoff plateaus and convexity bound", [&] {
    bool ok = true;
    for (const Vector& u : probe_directions(4, 3)) {
      const GluedPoint b{Region::Bubble, 3.0 * u};
      ok = ok && (gluing_metric(g, b) - g.t() * g.t() * eh->chart()->metric(3.0 * u)).norm() == 0.0;
      const GluedPoint o{Region::Orbifold, 0.3 * u};
      ok = ok && (gluing_metric(g, o) - g.orbifold().metric(0.3 * u)).norm() == 0.0;
      const GluedPoint edge{Region::Neck, g.inner_seam() * u};
      ok = ok && g.cutoff(g.inner_seam()) == 1.0 && g.cutoff(g.outer_seam()) == 0.0;
      ok = ok && (gluing_metric(g, edge) - eh->chart()->metric(edge.coords / g.t())).norm() == 0.0;
    }
    double prev = 1.0;
    for (double r : log_space(g.inner_seam(), g.outer_seam(), 50)) {
      const double c = g.cutoff(r);
      ok = ok && c <= prev && c >= 0.0 && c <= 1.0;
      prev = c;
    }
    const auto flat = std::shared_ptr<const RadialAleModel>(model_flat_cone(4, 2));
    const GluedGeometry gf(flat, orbifold_chart(random_orbifold(4, -3.0, 1.0, 2, rng), 1.0), 0.1);
    for (double r : log_space(gf.inner_seam(), gf.outer_seam(), 9))
      for (const Vector& u : probe_directions(4, 3)) {
        const GluedPoint p{Region::Neck, r * u};
        const ReferenceMetrics ref = reference_metrics(gf, p);
        const Matrix gt = gluing_metric(gf, p);
        ok = ok && (gt - Matrix::Identity(4, 4)).norm() <= (ref.bubble - ref.orbifold).norm() * (1 + 1e-14);
      }
    s.holds(mod, "cutoff plateaus and convexity bound", ok);
  });

  const SphereGrid dirs = make_sphere_grid(4, 4, 8);
  auto random_field = [&](std::mt19937_64& r) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::array<Matrix, 3> a;
    std::array<double, 3> ph;
    for (int k = 0; k < 3; ++k) {
      a[k] = Matrix::Zero(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) a[k](i, j) = a[k](j, i) = n(r);
      ph[k] = n(r);
    }
    return GluedField([a, ph, &g](const GluedPoint& p) {
      const double l = std::log(radius_function(g, p));
      Matrix out = Matrix::Zero(4, 4);
      for (int k = 0; k < 3; ++k) out += std::cos(0.2 * (k + 1) * l + ph[k]) * a[k];
      const Vector u = p.coords / p.coords.norm();
      out += 0.3 * u(0) * a[0];
      return out;
    });
  };
  s.group(mod, "weighted norm axioms on random fields", [&] {
    double hom = 0.0, tri = -INFINITY;
    const WeightedNormSpec spec;
    for (int k = 0; k < 4; ++k) {
      const GluedField f1 = random_field(rng), f2 = random_field(rng);
      const double n1 = weighted_norm_C0(g, f1, spec).value, n2 = weighted_norm_C0(g, f2, spec).value;
      const double c = -2.7 + k;
      const GluedField scaled = [&](const GluedPoint& p) { return Matrix(c * f1(p)); };
      const GluedField sum = [&](const GluedPoint& p) { return Matrix(f1(p) + f2(p)); };
      hom = std::max(hom, rel(weighted_norm_C0(g, scaled, spec).value, std::abs(c) * n1));
      tri = std::max(tri, (weighted_norm_C0(g, sum, spec).value - (n1 + n2)) / (n1 + n2));
    }
    s.le(mod, "weighted norm absolute homogeneity", hom, 1e-13);
    s.le(mod, "weighted norm triangle inequality (relative excess)", tri, 1e-14);
    const GluedField zero = [](const GluedPoint&) { return Matrix(Matrix::Zero(4, 4)); };
    s.le(mod, "weighted norm of the zero field", weighted_norm_C0(g, zero, spec).value, 0.0);
  });
  s.group(mod, "bubble term increases with beta1 near the neck", [&] {
    const GluedField neck = [&](const GluedPoint& p) {
      const double r = radius_function(g, p);
      const double s1 = std::log(r / g.inner_seam()) / std::log(g.outer_seam() / g.inner_seam());
      const double bump = (s1 > 0.0 && s1 < 1.0) ? std::exp(-1.0 / (s1 * (1.0 - s1))) : 0.0;
      return Matrix(bump * Matrix::Identity(4, 4));
    };
    WeightedNormSpec lo, hi;
    lo.beta1 = 0.3;
    hi.beta1 = 0.6;
    const double a = weighted_norm_C0(g, neck, lo).bubble_term, b = weighted_norm_C0(g, neck, hi).bubble_term;
    s.ge(mod, "bubble term increases with beta1 near the neck", b / a, 1.0 + 1e-9);
  });
  s.group(mod, "weighted norm of the profile field lies in [0.5, 2]", [&] {
    double lo = INFINITY, hi = 0.0;
    for (double beta : {0.25, 0.5, 0.75}) {
      WeightedNormSpec spec;
      spec.beta1 = spec.beta2 = beta;
      const GluedField f = [&](const GluedPoint& p) {
        return Matrix(weight_profile(g, beta, beta, radius_function(g, p)) * gluing_metric(g, p) / 2.0);
      };
      const double v = weighted_norm_C0(g, f, spec).value;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    s.ge(mod, "profile-field norm lower bound", lo, 0.5);
    s.le(mod, "profile-field norm upper bound", hi, 2.0);
  });
  s.group(mod, "orbifold-supported field with |s| = d^beta2 has norm 1", [&] {
    WeightedNormSpec spec;
    spec.beta2 = 0.5;
    const GluedField f = [&](const GluedPoint& p) {
      if (p.region != Region::Orbifold) return Matrix(Matrix::Zero(4, 4));
      const Matrix g0 = g.orbifold().metric(p.coords);
      return Matrix(std::sqrt(radius_function(g, p)) * g0 / 2.0);
    };
    s.le(mod, "orbifold-supported field with |s| = d^beta2 has norm 1",
         std::abs(weighted_norm_C0(g, f, spec).value - 1.0), kGridTolerance);
  });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Suite s(report.properties);
  std::mt19937_64 rng(options.seed);
  EhRuns runs;
  tensor_core(s, rng);
  ale_models(s, rng);
  asymptotics(s, runs, options.quick);
  poisson(s, runs, options.quick);
  obstruction(s, runs, options, rng);
  gluing(s, rng);
  return report;
}

}  // namespace alegeo
