#include "alegeo/core/poisson.hpp"

#include "alegeo/core/error.hpp"
#include "alegeo/core/sphere.hpp"

#include <Eigen/QR>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace alegeo {

namespace odeint = boost::numeric::odeint;

double RadialDerivatives::du() const { return 2 * r + dv; }
double RadialDerivatives::d2u() const { return 2 + d2v; }

RadialPoissonSolution::RadialPoissonSolution(std::shared_ptr<const RadialAleModel> model, double b,
                                             double c, double fit_lo, double fit_hi,
                                             double residual, double core_flux,
                                             std::vector<PoissonSample> samples)
    : model_(std::move(model)), b_(b), c_(c), fit_lo_(fit_lo), fit_hi_(fit_hi),
      residual_(residual), core_flux_(core_flux), samples_(std::move(samples)) {}

double RadialPoissonSolution::flux_deficit_integral(double r) const {
  const RadialAleModel& m = *model_;
  const double r_min = m.chart_min_radius();
  require(r >= r_min, ErrorCode::OutOfDomain, "radius below the ALE chart");
  // A fixed Gauss rule makes D a smooth function of r, so finite differences of
  // the deformation field see no quadrature noise.
  auto f = [&](double t) { return m.radial_volume_deficit(Jet2(t)).value(); };
  double total = core_flux_ / (2.0 * m.dim());
  double lo = r_min;
  double hi = r_min > 0 ? 2 * r_min : m.length_scale();
  while (lo < r) {
    hi = std::min(hi, r);
    total += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi);
    lo = hi;
    hi *= 2;
  }
  return 2.0 * m.dim() * total;
}

RadialDerivatives RadialPoissonSolution::radial(double r) const {
  const RadialAleModel& m = *model_;
  const double d = flux_deficit_integral(r);
  const Jet2 rj = Jet2::variable(r);
  const Jet2 flux = m.radial_flux_density(rj);
  const Jet2 fdef = m.radial_flux_deficit(rj);
  const double vdef = m.radial_volume_deficit(Jet2(r)).value();
  RadialDerivatives out;
  out.r = r;
  // flux * u' = D + 2 c r^m, rewritten around u = r^2.
  out.dv = (d - 2 * r * fdef[0]) / flux[0];
  out.d2v = (2.0 * m.dim() * vdef - 2 * fdef[0] - 2 * r * fdef[1] - out.dv * flux[1]) / flux[0];
  return out;
}

std::pair<double, double> RadialPoissonSolution::profile_derivatives(double s) const {
  const RadialAleModel& m = *model_;
  const double s0 = m.core_profile();
  const int dim = m.dim();
  auto area = [&](double t) { return m.profile_volume_density(Jet2(t)).value(); };
  double vol = 0.0;
  for (double lo = s0; lo < s; lo *= 2)
    vol += boost::math::quadrature::gauss<double, 30>::integrate(area, lo, std::min(2 * lo, s));
  const Jet2 sj = Jet2::variable(s);
  const Jet2 a = m.profile_volume_density(sj);
  const Jet2 n = m.profile_speed_sq(sj);
  const double us = 2.0 * dim * vol / (a[0] * n[0]);
  const double hess = 2.0 * dim - (a[1] / a[0]) * n[0] * us - 0.5 * n[1] * us;
  return {us, hess};
}

double RadialPoissonSolution::laplacian_residual(const Vector& x) const {
  const RadialAleModel& m = *model_;
  const auto chart = m.chart();
  const int dim = m.dim();
  const MetricJet j = chart->checked_jet(x);
  const Connection c = connection(j);
  const double r = x.norm();
  const RadialDerivatives rd = radial(r);
  const Vector xh = x / r;
  const Matrix id = Matrix::Identity(dim, dim);
  // Hess(v) - Gamma * du with u = r^2 + v; the 2 delta part is handled exactly.
  const Matrix ddv = rd.d2v * xh * xh.transpose() + (rd.dv / r) * (id - xh * xh.transpose());
  const Vector du = (2 * r + rd.dv) * xh;
  const Matrix h = covariant_hessian(c.gamma, du, ddv);
  const Matrix dev = chart->deviation(x);
  // g^{ij} 2 delta_ij - 2m = -2 tr(g^{-1} (g - delta))
  return -2.0 * (c.g_inv * dev).trace() + c.g_inv.cwiseProduct(h).sum();
}

std::string RadialPoissonSolution::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17) << "r,u,du,d2u\n";
  for (const auto& s : samples_) os << s.r << ',' << s.u << ',' << s.du << ',' << s.d2u << '\n';
  return os.str();
}

RadialPoissonSolution solve_poisson_radial(std::shared_ptr<const RadialAleModel> model,
                                           const PoissonOptions& options) {
  require(model != nullptr, ErrorCode::InvalidArgument, "null model");
  const RadialAleModel& m = *model;
  const int dim = m.dim();
  const double c = m.flat_density_coefficient();
  const double scale = m.length_scale();
  const double s_core = m.core_profile();
  const double s_ale = m.ale_profile_start();
  const double r_min = m.chart_min_radius();

  using State1 = std::array<double, 1>;
  using State2 = std::array<double, 2>;

  // Phase 1: total flux F = 2m Vol through the core, in the profile coordinate.
  // Regularity at the core means zero flux there; the first step uses the Taylor
  // expansion of the volume density.
  double flux_core = 0.0;
  if (s_ale > s_core) {
    const Jet2 a0 = m.profile_volume_density(Jet2::variable(s_core));
    const Jet2 an0 = a0 * m.profile_speed_sq(Jet2::variable(s_core));
    const Jet2 an1 = m.profile_volume_density(Jet2(s_ale)) * m.profile_speed_sq(Jet2(s_ale));
    require(std::abs(an0[0]) <= 1e-12 * std::abs(an1[0]), ErrorCode::InnerBoundaryIllPosed,
            "level sets do not collapse at the core");
    const double s0 = (s_core > 0) ? s_core * (1 + 1e-6) : 1e-6 * scale;
    const double h = s0 - s_core;
    State1 f{2.0 * dim * (a0[0] * h + a0[1] * h * h / 2 + a0[2] * h * h * h / 6)};
    auto rhs = [&](const State1&, State1& df, double s) {
      df[0] = 2.0 * dim * m.profile_volume_density(Jet2(s)).value();
    };
    odeint::integrate_adaptive(
        odeint::make_controlled(1e-14 * std::pow(scale, dim), options.rel_tol,
                                odeint::runge_kutta_dopri5<State1>()),
        rhs, f, s0, s_ale, 1e-3 * (s_ale - s0));
    require(std::isfinite(f[0]), ErrorCode::OdeFailure, "core flux integration failed");
    flux_core = f[0] - 2.0 * c * std::pow(r_min, dim);
  }

  // Phase 2: deviations from the flat solution in the ALE radius,
  //   D' = 2m (A - A_flat),  v' = (D - 2 r (A N - A_flat)) / (A N).
  const double r_start = r_min > 0 ? r_min : scale;
  const double r_max = options.r_max_scales * scale;
  require(r_max > 8 * r_start, ErrorCode::InvalidArgument, "outer radius too small");
  auto rhs = [&](const State2& y, State2& dy, double r) {
    const Jet2 rj(r);
    dy[0] = 2.0 * dim * m.radial_volume_deficit(rj).value();
    dy[1] = (y[0] - 2 * r * m.radial_flux_deficit(rj).value()) / m.radial_flux_density(rj).value();
  };
  std::vector<double> times = log_space(r_start, r_max, options.samples);
  std::vector<State2> states;
  State2 y{flux_core, 0.0};
  odeint::integrate_times(
      odeint::make_dense_output(1e-14 * std::pow(scale, dim), options.rel_tol,
                                odeint::runge_kutta_dopri5<State2>()),
      rhs, y, times.begin(), times.end(), 1e-3 * r_start,
      [&](const State2& s, double) { states.push_back(s); });
  require(states.size() == times.size(), ErrorCode::OdeFailure, "ODE did not reach the outer radius");
  for (const auto& s : states)
    require(std::isfinite(s[0]) && std::isfinite(s[1]), ErrorCode::OdeFailure, "non-finite ODE state");

  // v_raw = -C + b r^{2-m} + c r^{1-m} on [r_max / 4, r_max].
  const double fit_lo = r_max / 4;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < times.size(); ++i)
    if (times[i] >= fit_lo * (1 - 1e-12)) idx.push_back(i);
  const int n = static_cast<int>(idx.size());
  Matrix a(n, 3);
  Vector rhs_v(n);
  for (int i = 0; i < n; ++i) {
    const double r = times[idx[static_cast<std::size_t>(i)]];
    a(i, 0) = 1.0;
    a(i, 1) = std::pow(r / r_max, 2 - dim);
    a(i, 2) = std::pow(r / r_max, 1 - dim);
    rhs_v(i) = states[idx[static_cast<std::size_t>(i)]][1];
  }
  const Vector coef = a.colPivHouseholderQr().solve(rhs_v);
  const double offset = -coef(0);
  const double b = coef(1) * std::pow(r_max, dim - 2);
  const double cc = coef(2) * std::pow(r_max, dim - 1);
  const Vector res = a * coef - rhs_v;
  const double b_scale = std::abs(b) * std::pow(r_max, 2 - dim);
  const double residual = b_scale > 0 ? res.norm() / std::sqrt(n) / b_scale : res.norm();

  std::vector<PoissonSample> samples;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double r = times[i];
    const double v = states[i][1] + offset;
    const Jet2 rj = Jet2::variable(r);
    const Jet2 flux = m.radial_flux_density(rj);
    const Jet2 fdef = m.radial_flux_deficit(rj);
    const double dv = (states[i][0] - 2 * r * fdef[0]) / flux[0];
    const double d2v = (2.0 * dim * m.radial_volume_deficit(Jet2(r)).value() - 2 * fdef[0] -
                        2 * r * fdef[1] - dv * flux[1]) / flux[0];
    samples.push_back({r, r * r + v, 2 * r + dv, 2 + d2v});
  }
  return RadialPoissonSolution(std::move(model), b, cc, fit_lo, r_max, residual, flux_core,
                               std::move(samples));
}

double poisson_volume(const RadialAleModel& model, const RadialPoissonSolution& sol) {
  const int m = model.dim();
  return (2.0 - m) / (2.0 * m) * model.flat_density_coefficient() * sol.b_coeff();
}

DeformationField::DeformationField(std::shared_ptr<const RadialPoissonSolution> sol)
    : sol_(std::move(sol)) {
  require(sol_ != nullptr, ErrorCode::InvalidArgument, "null Poisson solution");
}

Matrix DeformationField::value(const Vector& x) const {
  const RadialAleModel& m = sol_->model();
  const auto chart = m.chart();
  const int dim = m.dim();
  const double r = x.norm();
  require(chart->contains(x), ErrorCode::OutOfDomain, "point outside the ALE chart");
  const RadialDerivatives rd = sol_->radial(r);
  const Vector xh = x / r;
  const Matrix id = Matrix::Identity(dim, dim);
  const Matrix ddv = rd.d2v * xh * xh.transpose() + (rd.dv / r) * (id - xh * xh.transpose());
  const Vector du = (2 * r + rd.dv) * xh;
  const Connection c = connection(chart->jet(x));
  // 2 Hess u - 4 g = 2 (Hess v - Gamma du) - 4 (g - delta), with Hess(r^2) = 2 delta.
  return 2.0 * covariant_hessian(c.gamma, du, ddv) - 4.0 * chart->deviation(x);
}

double deformation_l2_norm(const RadialPoissonSolution& sol) {
  const RadialAleModel& m = sol.model();
  // Flat cones have u = r^2 exactly and no deformation.
  if (m.core_radius() == 0.0) return 0.0;
  const double s0 = m.core_profile();
  const int dim = m.dim();
  auto density = [&](double s) {
    const auto [us, radial] = sol.profile_derivatives(s);
    const Jet2 n = m.profile_speed_sq(Jet2::variable(s));
    double sum = 0.0;
    sum += (2 * radial - 4) * (2 * radial - 4);
    for (double k : m.level_set_curvatures(s)) {
      const double lam = k * std::sqrt(n[0]) * us;
      sum += (2 * lam - 4) * (2 * lam - 4);
    }
    return sum * m.profile_volume_density(Jet2(s)).value();
  };
  const double s_end = 1024 * m.length_scale();
  // The integrand loses relative precision far out, so an absolute tolerance
  // is taken from a coarse fixed-rule pass.
  double coarse = 0.0;
  for (double lo = s0, hi = 2 * s0; lo < s_end; lo = hi, hi *= 2)
    coarse += boost::math::quadrature::gauss<double, 30>::integrate(density, lo, hi);
  double total = 0.0;
  for (double lo = s0, hi = 2 * s0; lo < s_end; lo = hi, hi *= 2)
    total += integrate(density, lo, hi, 1e-10, 1e-11 * coarse);
  // Tail: the density decays like s^{-m-1}.
  total += density(s_end) * s_end / dim;
  return std::sqrt(total);
}

ExplicitDeformation explicit_deformation(std::shared_ptr<const RadialPoissonSolution> sol,
                                         const std::vector<double>& radii) {
  check_schedule(radii, 2);
  const RadialAleModel& m = sol->model();
  const int dim = m.dim();
  ExplicitDeformation out;
  auto field = std::make_shared<DeformationField>(sol);
  out.field = field;
  const SphereGrid grid = default_sphere_grid(dim);
  const Matrix id = Matrix::Identity(dim, dim);
  std::vector<Matrix> block;
  for (const Vector& u : grid.points) block.push_back(dim * u * u.transpose() - id);
  const double bb = sphere_inner(grid, block, block);

  for (double r : radii) {
    ExpansionFit fit;
    fit.radius = r;
    const double scale = std::pow(r, dim);
    std::vector<Matrix> y;
    y.reserve(grid.size());
    for (const Vector& u : grid.points) y.push_back(scale * field->value(r * u));
    fit.volume_block = sphere_inner(grid, y, block) / bb;
    std::vector<Matrix> rest(y.size());
    for (std::size_t p = 0; p < y.size(); ++p) rest[p] = y[p] - fit.volume_block * block[p];
    const QuadraticFormFit q = fit_quadratic_form(grid, rest);
    const WeylTensor w = weyl_from_quadratic_form(q.coefficients);
    fit.weyl_block = w.tensor();
    const std::vector<Matrix> qw = evaluate_quadratic_form(w.tensor(), grid);
    for (std::size_t p = 0; p < y.size(); ++p) rest[p] -= qw[p];
    fit.residual = sphere_l2_norm(grid, rest);
    out.fits.push_back(fit);
  }
  std::vector<double> rs, res;
  double worst = 0.0;
  for (const auto& f : out.fits) {
    rs.push_back(f.radius);
    res.push_back(f.residual);
    worst = std::max(worst, f.residual);
  }
  if (worst > 0.0) {
    out.residual_slope = loglog_slope(rs, res);
    require(out.residual_slope <= -0.5, ErrorCode::ExpansionFitFailure,
            "remainder slope " + std::to_string(out.residual_slope) + " is not below -0.5");
  }
  const auto& a = out.fits[out.fits.size() - 2];
  const auto& b = out.fits.back();
  const double w = 1.0 / (b.radius - a.radius);
  out.volume_block = w * (b.radius * b.volume_block - a.radius * a.volume_block);
  out.weyl_block = WeylTensor::project(w * (b.radius * b.weyl_block - a.radius * a.weyl_block));
  out.l2_norm = deformation_l2_norm(*sol);
  return out;
}

}  // namespace alegeo
