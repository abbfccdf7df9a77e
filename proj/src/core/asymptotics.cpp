#include "alegeo/core/asymptotics.hpp"

#include "alegeo/core/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace alegeo {

std::vector<double> default_schedule(const RadialAleModel& model) {
  const double s = model.length_scale();
  return {8 * s, 16 * s, 32 * s, 64 * s};
}

double core_volume_deficit(const RadialAleModel& model) {
  const double s0 = model.core_profile();
  const double s1 = model.ale_profile_start();
  const double r_min = model.chart_min_radius();
  const int m = model.dim();
  double core = 0.0;
  if (s1 > s0)
    core = integrate([&](double s) { return model.profile_volume_density(Jet2(s)).value(); }, s0, s1,
                     1e-12);
  return core - model.flat_density_coefficient() * std::pow(r_min, m) / m;
}

double volume_deficit(const RadialAleModel& model, double r) {
  const double r_min = model.chart_min_radius();
  require(r >= r_min, ErrorCode::OutOfDomain, "radius below the ALE chart");
  const int m = model.dim();
  auto f = [&](double t) { return model.radial_volume_deficit(Jet2(t)).value(); };
  // Dyadic pieces keep the r^{-m-1} tail well resolved.
  double lo = r_min, total = core_volume_deficit(model);
  const double scale = model.flat_density_coefficient() * std::pow(r, m);
  double hi = (r_min > 0) ? 2 * r_min : std::min(r, model.length_scale());
  while (lo < r) {
    hi = std::min(hi, r);
    total += integrate(f, lo, hi, 1e-10, 1e-15 * scale);
    lo = hi;
    hi *= 2;
  }
  return total;
}

RenormalizedVolume renormalized_volume(const RadialAleModel& model,
                                       const std::vector<double>& schedule) {
  check_schedule(schedule, 2);
  require(schedule.back() >= 32 * model.length_scale() * (1 - 1e-12), ErrorCode::ScheduleTooShort,
          "schedule must reach 32 length scales");
  require(schedule.front() >= model.chart_min_radius(), ErrorCode::OutOfDomain,
          "schedule starts inside the core");
  std::vector<double> values;
  for (double r : schedule) values.push_back(volume_deficit(model, r));
  RenormalizedVolume out;
  out.table = richardson_table("renormalized_volume", schedule, values, model.dim());
  out.value = out.table.limit();
  out.error = out.table.error();
  require(out.error <= 1e-3 * std::abs(out.value) || out.error == 0.0, ErrorCode::ScheduleTooShort,
          "renormalized_volume table has not converged (error " + std::to_string(out.error) + ")");
  return out;
}

double sphere_inner(const SphereGrid& grid, const std::vector<Matrix>& a,
                    const std::vector<Matrix>& b) {
  double s = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) s += grid.weights[n] * a[n].cwiseProduct(b[n]).sum();
  return s;
}

double sphere_l2_norm(const SphereGrid& grid, const std::vector<Matrix>& samples) {
  return std::sqrt(std::max(0.0, sphere_inner(grid, samples, samples)));
}

std::vector<Matrix> evaluate_quadratic_form(const Tensor4& t, const SphereGrid& grid) {
  const int m = t.dim();
  std::vector<Matrix> out;
  out.reserve(grid.size());
  for (const Vector& x : grid.points) {
    Matrix q = Matrix::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) s += t(i, k, j, l) * x(k) * x(l);
        q(i, j) = s;
      }
    out.push_back(q);
  }
  return out;
}

QuadraticFormFit fit_quadratic_form(const SphereGrid& grid, const std::vector<Matrix>& samples) {
  const int m = grid.dim;
  require(samples.size() == grid.size(), ErrorCode::DimensionMismatch, "sample count");
  const int nb = m * (m + 1) / 2;
  const int n = static_cast<int>(grid.size());
  Matrix design(n, nb), rhs(n, nb);
  for (int p = 0; p < n; ++p) {
    const double sw = std::sqrt(grid.weights[static_cast<std::size_t>(p)]);
    const Vector& x = grid.points[static_cast<std::size_t>(p)];
    const Matrix& y = samples[static_cast<std::size_t>(p)];
    int b = 0;
    for (int k = 0; k < m; ++k)
      for (int l = k; l < m; ++l, ++b) {
        design(p, b) = sw * x(k) * x(l);
        rhs(p, b) = sw * y(k, l);  // component (i, j) = (k, l) shares the same indexing
      }
  }
  Eigen::JacobiSVD<Matrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  QuadraticFormFit fit;
  fit.condition_number = sv(0) / sv(sv.size() - 1);
  require(std::isfinite(fit.condition_number) && fit.condition_number <= kMaxFitCondition,
          ErrorCode::FitIllConditioned,
          "design matrix condition number " + std::to_string(fit.condition_number));
  const Matrix coef = svd.solve(rhs);  // rows: basis (k, l); columns: component (i, j)
  fit.coefficients = Tensor4(m);
  int cij = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j, ++cij) {
      int b = 0;
      for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l, ++b) {
          const double c = (k == l) ? coef(b, cij) : 0.5 * coef(b, cij);
          fit.coefficients(i, k, j, l) = fit.coefficients(j, k, i, l) = c;
          fit.coefficients(i, l, j, k) = fit.coefficients(j, l, i, k) = c;
        }
    }
  fit.fitted = evaluate_quadratic_form(fit.coefficients, grid);
  std::vector<Matrix> diff(samples.size());
  for (std::size_t p = 0; p < samples.size(); ++p) diff[p] = samples[p] - fit.fitted[p];
  const double norm = sphere_l2_norm(grid, samples);
  fit.fit_residual = norm > 0 ? sphere_l2_norm(grid, diff) / norm : 0.0;
  return fit;
}

WeylTensor weyl_from_quadratic_form(const Tensor4& t) {
  return WeylTensor::project(t).scaled(4.0 / 3.0);
}

namespace {

WeylFitAtRadius fit_at_radius(const RadialAleModel& model, double r, const SphereGrid& grid) {
  const int m = model.dim();
  const auto chart = model.chart();
  std::vector<Matrix> samples;
  samples.reserve(grid.size());
  const double scale = std::pow(r, m);
  for (const Vector& u : grid.points) {
    const Vector x = r * u;
    chart->check_point(x);
    samples.push_back(scale * chart->deviation(x));
  }
  WeylFitAtRadius out;
  out.radius = r;
  out.amplitude = sphere_l2_norm(grid, samples);
  const QuadraticFormFit fit = fit_quadratic_form(grid, samples);
  out.condition_number = fit.condition_number;
  out.fit_residual = fit.fit_residual;
  const WeylTensor w = weyl_from_quadratic_form(fit.coefficients);
  out.weyl = w.tensor();
  const std::vector<Matrix> qw = evaluate_quadratic_form(w.tensor(), grid);
  std::vector<Matrix> diff(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) diff[p] = fit.fitted[p] - qw[p];
  const double qt = sphere_l2_norm(grid, fit.fitted);
  out.gauge_residual = qt > 0 ? sphere_l2_norm(grid, diff) / qt : 0.0;
  return out;
}

double bianchi_residual_at(const RadialAleModel& model, double r) {
  const int m = model.dim();
  const auto chart = model.chart();
  const SphereGrid grid = make_sphere_grid(m, 3, 6);
  double worst_b = 0.0, worst_h = 0.0;
  for (const Vector& u : grid.points) {
    const Vector x = r * u;
    const MetricJet j = chart->checked_jet(x);
    // B_E(h)_i = -d_j h_ij + 1/2 d_i tr h with h = g - delta.
    Vector b = Vector::Zero(m);
    for (int i = 0; i < m; ++i) {
      b(i) = 0.5 * j.dg[static_cast<std::size_t>(i)].trace();
      for (int k = 0; k < m; ++k) b(i) -= j.dg[static_cast<std::size_t>(k)](i, k);
    }
    worst_b = std::max(worst_b, b.cwiseAbs().maxCoeff());
    worst_h = std::max(worst_h, chart->deviation(x).cwiseAbs().maxCoeff());
  }
  return worst_h > 0 ? r * worst_b / worst_h : 0.0;
}

}  // namespace

AsymptoticWeyl extract_asymptotic_weyl(const RadialAleModel& model, const std::vector<double>& radii,
                                       const SphereGrid& grid) {
  check_schedule(radii, 2);
  require(radii.back() >= 2 * radii.front(), ErrorCode::InvalidArgument,
          "fit radii must span at least one octave");
  require(grid.dim == model.dim(), ErrorCode::DimensionMismatch, "sphere grid dimension");
  AsymptoticWeyl out;
  for (double r : radii) out.per_radius.push_back(fit_at_radius(model, r, grid));
  for (std::size_t k = 1; k < out.per_radius.size(); ++k) {
    const auto& a = out.per_radius[k - 1];
    const auto& b = out.per_radius[k];
    if (a.amplitude == 0.0) continue;
    const double octaves = std::log2(b.radius / a.radius);
    require(b.amplitude <= a.amplitude * std::pow(2.0, octaves), ErrorCode::NonDecayingInput,
            "r^m-scaled metric deviation grows with radius");
  }
  const std::size_t n = out.per_radius.size();
  auto extrapolate = [&](std::size_t k) {
    const auto& a = out.per_radius[k - 1];
    const auto& b = out.per_radius[k];
    // Linear in 1/r: W(r) = W_inf + c / r.
    return (1.0 / (b.radius - a.radius)) * (b.radius * b.weyl - a.radius * a.weyl);
  };
  const Tensor4 w_inf = extrapolate(n - 1);
  out.weyl = WeylTensor::project(w_inf);
  const double norm = w_inf.norm();
  const Tensor4 reference = (n >= 3) ? extrapolate(n - 2) : out.per_radius[n - 1].weyl;
  out.extrapolation_error = norm > 0 ? (w_inf - reference).norm() / norm : 0.0;
  out.gauge_residual = out.per_radius.back().gauge_residual;
  out.bianchi_residual = bianchi_residual_at(model, radii.back());
  std::vector<double> norms;
  for (const auto& f : out.per_radius) norms.push_back(f.weyl.norm());
  out.table = richardson_table("asymptotic_weyl_norm", radii, norms, 1.0);
  return out;
}

AsymptoticWeyl extract_asymptotic_weyl(const RadialAleModel& model,
                                       const std::vector<double>& radii) {
  return extract_asymptotic_weyl(model, radii, default_sphere_grid(model.dim()));
}

AleInvariants compute_invariants(const RadialAleModel& model, const std::vector<double>& schedule) {
  AleInvariants inv;
  inv.dim = model.dim();
  inv.group_order = model.group_order();
  const RenormalizedVolume v = renormalized_volume(model, schedule);
  inv.renormalized_volume = v.value;
  inv.volume_error = v.error;
  inv.volume_table = v.table;
  const AsymptoticWeyl w = extract_asymptotic_weyl(model, schedule);
  inv.asymptotic_weyl = w.weyl;
  inv.gauge_residual = w.gauge_residual;
  inv.bianchi_residual = w.bianchi_residual;
  inv.extrapolation_error = w.extrapolation_error;
  inv.fit_radii = schedule;
  inv.weyl_table = w.table;
  return inv;
}

double ale_decay_exponent(const RadialAleModel& model, const std::vector<double>& radii) {
  const SphereGrid grid = make_sphere_grid(model.dim(), 4, 8);
  const auto chart = model.chart();
  std::vector<double> amp;
  for (double r : radii) {
    double worst = 0.0;
    for (const Vector& u : grid.points)
      worst = std::max(worst, chart->deviation(r * u).cwiseAbs().maxCoeff());
    amp.push_back(worst);
  }
  return -loglog_slope(radii, amp);
}

ScaleInvarianceReport scale_invariance_check(const RadialAleModel& model, double lambda) {
  require(lambda >= 0.5 && lambda <= 2.0, ErrorCode::InvalidArgument,
          "scale factor must lie in [0.5, 2]");
  const auto scaled = model.rescaled(lambda);
  const AleInvariants a = compute_invariants(model, default_schedule(model));
  const AleInvariants b = compute_invariants(*scaled, default_schedule(*scaled));
  ScaleInvarianceReport rep;
  rep.lambda = lambda;
  rep.volume = a.renormalized_volume;
  rep.volume_scaled = b.renormalized_volume;
  rep.weyl_norm = a.asymptotic_weyl.norm();
  rep.weyl_norm_scaled = b.asymptotic_weyl.norm();
  const double f = std::pow(lambda, model.dim());
  auto ratio_error = [f](double x, double y) {
    if (x == 0.0 && y == 0.0) return 0.0;
    return std::abs(y - f * x) / std::max(std::abs(f * x), 1e-300);
  };
  rep.volume_ratio_error = ratio_error(rep.volume, rep.volume_scaled);
  rep.weyl_ratio_error = ratio_error(rep.weyl_norm, rep.weyl_norm_scaled);
  return rep;
}

}  // namespace alegeo
