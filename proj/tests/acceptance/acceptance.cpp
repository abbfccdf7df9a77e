// Acceptance run: one PASS/FAIL line per criterion with its measured quantities and runtime.
#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/curvature.hpp"
#include "alegeo/core/gluing.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/numerics.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/operators.hpp"
#include "alegeo/core/poisson.hpp"
#include "alegeo/core/sphere.hpp"
#include "alegeo/core/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace alegeo;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = t < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++g_failures;
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s budget%s", t, budget_s, in_time ? "" : " EXCEEDED");
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " | " << o.detail
            << " | " << timing << std::endl;
}

std::string sci(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

std::vector<Vector> directions(int m, int count) {
  std::vector<Vector> out;
  for (int k = 0; k < count; ++k) {
    Vector u(m);
    for (int i = 0; i < m; ++i) u(i) = std::cos(0.9 * (k + 2) * (i + 1) + 0.1 * k);
    out.push_back(u / u.norm());
  }
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& cmd) {
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

int main() {
  std::cout << "acceptance run, seed " << kDefaultSeed << std::endl;
  std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);

  criterion(1, "curvature symmetries, first and contracted second Bianchi", 5.0, [&] {
    const auto hyp = hyperbolic_normal_chart(4, 5.0);
    const auto sph = stereographic_sphere_chart(4);
    const std::vector<std::shared_ptr<const MetricChart>> charts{eh->chart(), hyp, sph};
    const std::vector<double> radius{3.0, 0.8, 0.6};
    double analytic = 0.0, fd = 0.0, bianchi2 = 0.0;
    for (std::size_t c = 0; c < charts.size(); ++c) {
      const FiniteDifferenceChart fdc(charts[c]);
      const auto chart = charts[c];
      const FunctionSym2Field ric(4, [chart](const Vector& x) {
        const Connection k = connection(*chart, x);
        return ricci(riemann(k), k.g);
      });
      for (const Vector& u : directions(4, 4)) {
        const Vector x = radius[c] * u;
        analytic = std::max(analytic, curvature_symmetry_residuals(riemann(*chart, x)).max());
        fd = std::max(fd, curvature_symmetry_residuals(riemann(fdc, x)).max());
        const double scale = std::max(1.0, ric.value(x).cwiseAbs().maxCoeff());
        bianchi2 = std::max(bianchi2, bianchi_op(*chart, ric, x).cwiseAbs().maxCoeff() / scale);
      }
    }
    return Outcome{analytic <= 1e-9 && fd <= 1e-6 && bianchi2 <= 1e-6,
                   "analytic " + sci(analytic) + " <= 1e-9, finite-difference " + sci(fd) +
                       " <= 1e-6, B(Ric) " + sci(bianchi2) + " <= 1e-6"};
  });

  criterion(2, "Eguchi-Hanson Ricci-flat at 5 radii", 5.0, [&] {
    const double r = ricci_residual(*eh, log_space(2.0, 32.0, 5));
    return Outcome{r <= 1e-7, "max |Ric| " + sci(r) + " <= 1e-7"};
  });

  criterion(3, "two-route renormalized volume", 60.0, [&] {
    bool ok = true;
    std::string d;
    for (double a : {0.5, 1.0, 2.0}) {
      std::shared_ptr<const RadialAleModel> m = model_eguchi_hanson(a);
      const double direct = compute_invariants(*m, default_schedule(*m)).renormalized_volume;
      const double viaP = poisson_volume(*m, solve_poisson_radial(m));
      const double r = rel(viaP, direct);
      ok = ok && r <= 5e-3 && direct < 0.0 && viaP < 0.0;
      d += "a=" + sci(a) + ": V " + sci(direct) + " vs " + sci(viaP) + " (rel " + sci(r) + "); ";
    }
    std::shared_ptr<const RadialAleModel> flat = model_flat_cone(4, 2);
    const double vf = compute_invariants(*flat, default_schedule(*flat)).renormalized_volume;
    const double pf = poisson_volume(*flat, solve_poisson_radial(flat));
    ok = ok && vf == 0.0 && pf == 0.0;
    return Outcome{ok, d + "flat cone " + sci(vf) + ", " + sci(pf)};
  });

  criterion(4, "scaling of V and |W_inf| under a -> 2a", 120.0, [&] {
    const ScaleInvarianceReport s = scale_invariance_check(*eh, 2.0);
    return Outcome{s.volume_ratio_error <= 1e-3 && s.weyl_ratio_error <= 1e-2,
                   "V ratio error " + sci(s.volume_ratio_error) + " <= 1e-3, |W| ratio error " +
                       sci(s.weyl_ratio_error) + " <= 1e-2"};
  });

  criterion(5, "explicit deformation: gauge, kernel and expansion blocks", 60.0, [&] {
    const auto sol = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(eh));
    const DeformationField o(sol);
    const auto c = eh->chart();
    double tr = 0.0, dv = 0.0, pp = 0.0;
    for (double r : {2.0, 4.0, 8.0})
      for (const Vector& u : directions(4, 4)) {
        const Vector x = r * u;
        tr = std::max(tr, std::abs(trace(*c, o, x)));
        dv = std::max(dv, divergence(*c, o, x).cwiseAbs().maxCoeff());
        pp = std::max(pp, apply_P(*c, o, x).cwiseAbs().maxCoeff());
      }
    const AleInvariants inv = compute_invariants(*eh, default_schedule(*eh));
    const ExplicitDeformation d = explicit_deformation(sol, default_schedule(*eh));
    const double vb = rel(d.volume_block, -16.0 * 2.0 / sphere_area(4) * inv.renormalized_volume);
    const Tensor4& wi = inv.asymptotic_weyl.tensor();
    const double wb = std::max(rel(contract(d.weyl_block.tensor(), wi) / contract(wi, wi), -8.0),
                               rel(d.weyl_block.norm() / inv.asymptotic_weyl.norm(), 8.0));
    return Outcome{tr <= 1e-8 && dv <= 1e-5 && pp <= 1e-5 && vb <= 1e-2 && wb <= 2e-2,
                   "trace " + sci(tr) + ", div " + sci(dv) + ", P " + sci(pp) + ", V-block " + sci(vb) +
                       " <= 1e-2, W-block " + sci(wb) + " <= 2e-2"};
  });

  criterion(6, "H identities over 100 random Einstein orbifold data", 10.0, [&] {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const int m = 3 + k % 3;
      const WeylTensor w = m >= 4 ? WeylTensor::project(u(rng) * random_weyl(m, rng)) : WeylTensor::zero(m);
      const QuadraticTensorH h = build_H(orbifold_custom(m, u(rng), w, 1));
      Vector x(m);
      for (int i = 0; i < m; ++i) x(i) = u(rng);
      worst = std::max(worst, h_residuals(h, x).max());
    }
    return Outcome{worst <= 1e-9, "worst residual " + sci(worst) + " <= 1e-9"};
  });

  criterion(7, "sphere moments vs seeded Monte Carlo (1e6 points)", 30.0, [&] {
    std::mt19937_64 rng(kDefaultSeed);
    bool ok = true;
    std::string d;
    for (int m : {3, 4, 5}) {
      const MomentComparison c = compare_sphere_moments(m, sphere_moment4(m), 1000000, rng);
      ok = ok && c.passed;
      d += "m=" + std::to_string(m) + ": max " + sci(c.max_sigma) + " sigma over " +
           std::to_string(c.patterns) + " patterns; ";
    }
    return Outcome{ok, d + "bound 3 sigma"};
  });

  criterion(8, "two-route lambda0 for Eguchi-Hanson x {hyperbolic, 3 random}", 120.0, [&] {
    const AleInvariants inv = compute_invariants(*eh, default_schedule(*eh));
    const auto sol = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(eh));
    const ExplicitDeformation d = explicit_deformation(sol, default_schedule(*eh));
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_real_distribution<double> u(0.5, 3.0);
    std::vector<OrbifoldPointData> data{orbifold_hyperbolic(4, 2)};
    for (int k = 0; k < 3; ++k)
      data.push_back(orbifold_custom(4, -u(rng), WeylTensor::project(5.0 * u(rng) * random_weyl(4, rng)), 2));
    double worst = 0.0;
    for (const auto& dat : data) {
      const PairingResult p = lambda_pairing(*eh, build_H(dat), *d.field, default_schedule(*eh));
      worst = std::max(worst, rel(p.value, lambda0_closed_form(dat, inv)));
    }
    return Outcome{worst <= 1e-2, "worst relative discrepancy " + sci(worst) + " <= 1e-2"};
  });

  criterion(9, "hyperbolic Z2 data with Eguchi-Hanson is obstructed, value = -3 V", 60.0, [&] {
    const ObstructionPipeline p = evaluate_obstruction(eh, orbifold_hyperbolic(4, 2), default_schedule(*eh));
    const double v = p.invariants.renormalized_volume;
    const double dev = rel(p.report.value, -3.0 * v);
    return Outcome{dev <= 1e-6 && p.report.verdict == Verdict::Obstructed,
                   "value " + sci(p.report.value) + ", -3V " + sci(-3.0 * v) + ", deviation " + sci(dev) +
                       " <= 1e-6, verdict " + to_string(p.report.verdict)};
  });

  criterion(10, "rotation invariance, bilinearity and value identity", 10.0, [&] {
    const AleInvariants inv = compute_invariants(*eh, default_schedule(*eh));
    std::mt19937_64 rng(kDefaultSeed);
    const auto mk = [&](double mu) {
      return orbifold_custom(4, mu, WeylTensor::project(2.0 * random_weyl(4, rng)), 2);
    };
    const OrbifoldPointData a = mk(-1.5), b = mk(-1.5);
    const double v0 = obstruction_value(a, inv).value;
    double drift = 0.0;
    for (int k = 0; k < 5; ++k) {
      const Matrix q = random_orthogonal(4, rng);
      AleInvariants rot = inv;
      rot.asymptotic_weyl = inv.asymptotic_weyl.rotated(q);
      drift = std::max(drift, rel(obstruction_value(orbifold_custom(4, a.mu, a.weyl.rotated(q), 2), rot).value, v0));
    }
    const auto z = orbifold_custom(4, -1.5, WeylTensor::zero(4), 2);
    const double f0 = lambda0_closed_form(z, inv);
    const double lhs = lambda0_closed_form(orbifold_custom(4, -1.5, a.weyl + b.weyl, 2), inv) - f0;
    const double rhs = lambda0_closed_form(a, inv) - f0 + lambda0_closed_form(b, inv) - f0;
    const double sup = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    double ident = 0.0;
    for (double mu : {-0.5, -2.0, -7.0}) {
      const ObstructionReport r = obstruction_value(mk(mu), inv);
      ident = std::max(ident, rel(r.value, -r.lambda0_closed / 16.0));
    }
    return Outcome{drift <= 1e-10 && sup <= 1e-12 && ident <= 1e-13,
                   "rotation drift " + sci(drift) + " <= 1e-10, superposition " + sci(sup) +
                       " <= 1e-12, identity " + sci(ident)};
  });

  criterion(11, "gluing seams, weighted-norm band and norm axioms", 10.0, [&] {
    const GluedGeometry g(eh, orbifold_chart(orbifold_hyperbolic(4, 2), 1.0), 0.1);
    double seam = 0.0;
    for (const Vector& u : directions(4, 6)) {
      seam = std::max(seam, rel(radius_function(g, {Region::Bubble, u / g.delta()}),
                                radius_function(g, {Region::Neck, g.inner_seam() * u})));
      seam = std::max(seam, rel(radius_function(g, {Region::Neck, g.delta() * u}),
                                radius_function(g, {Region::Orbifold, g.delta() * u})));
    }
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
    std::mt19937_64 rng(kDefaultSeed);
    std::normal_distribution<double> n(0.0, 1.0);
    auto field = [&] {
      Matrix a(4, 4), b(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          a(i, j) = a(j, i) = n(rng);
          b(i, j) = b(j, i) = n(rng);
        }
      const double ph = n(rng);
      return GluedField([a, b, ph, &g](const GluedPoint& p) {
        const double l = std::log(radius_function(g, p));
        return Matrix(std::cos(0.3 * l + ph) * a + std::sin(0.2 * l) * b);
      });
    };
    double hom = 0.0, tri = -INFINITY;
    const WeightedNormSpec spec;
    for (int k = 0; k < 3; ++k) {
      const GluedField f1 = field(), f2 = field();
      const double n1 = weighted_norm_C0(g, f1, spec).value, n2 = weighted_norm_C0(g, f2, spec).value;
      const GluedField s = [&](const GluedPoint& p) { return Matrix(-3.0 * f1(p)); };
      const GluedField sum = [&](const GluedPoint& p) { return Matrix(f1(p) + f2(p)); };
      hom = std::max(hom, rel(weighted_norm_C0(g, s, spec).value, 3.0 * n1));
      tri = std::max(tri, (weighted_norm_C0(g, sum, spec).value - n1 - n2) / (n1 + n2));
    }
    return Outcome{seam <= 1e-12 && lo >= 0.5 && hi <= 2.0 && hom <= 1e-13 && tri <= 1e-14,
                   "seam jump " + sci(seam) + ", band [" + sci(lo) + ", " + sci(hi) + "] in [0.5, 2], homogeneity " +
                       sci(hom) + ", triangle excess " + sci(tri)};
  });

  criterion(12, "repeated verify and obstruction CLI runs are byte-identical", 600.0, [&] {
    const fs::path dir = fs::temp_directory_path() / "alegeo_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = ALEGEO_CLI_PATH;
    bool ok = true;
    std::string d;
    for (const std::string& cmd : {std::string("verify"), std::string("obstruction --orbifold hyperbolic --model eguchi-hanson --a 1")}) {
      const std::string tag = cmd.substr(0, cmd.find(' '));
      std::vector<std::string> files[2];
      for (int k = 0; k < 2; ++k) {
        const fs::path sub = dir / (tag + std::to_string(k));
        fs::create_directories(sub);
        const int code = run(cli + " " + cmd + " --seed " + std::to_string(kDefaultSeed) + " --out " +
                             (sub / "report.json").string() + " >/dev/null 2>&1");
        ok = ok && code == 0;
        for (const auto& e : fs::directory_iterator(sub)) files[k].push_back(e.path().filename().string());
        std::sort(files[k].begin(), files[k].end());
      }
      ok = ok && files[0] == files[1] && !files[0].empty();
      std::size_t bytes = 0;
      for (const std::string& f : files[0]) {
        const std::string a = slurp(dir / (tag + "0") / f), b = slurp(dir / (tag + "1") / f);
        ok = ok && a == b;
        bytes += a.size();
      }
      d += tag + ": " + std::to_string(files[0].size()) + " files, " + std::to_string(bytes) + " bytes; ";
    }
    return Outcome{ok, d + (ok ? "identical" : "differ")};
  });

  std::cout << (g_failures == 0 ? "all 12 criteria passed" : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
