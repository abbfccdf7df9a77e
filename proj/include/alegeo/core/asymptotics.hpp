#pragma once

#include "alegeo/core/curvature.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/numerics.hpp"
#include "alegeo/core/sphere.hpp"

#include <vector>

namespace alegeo {

/// {8, 16, 32, 64} times the model's length scale.
std::vector<double> default_schedule(const RadialAleModel& model);

/// Vol(core up to the chart boundary) minus the flat ball of radius chart_min_radius().
double core_volume_deficit(const RadialAleModel& model);

/// Vol(Omega_r) - Vol_E(B_r) on the quotient, for r >= chart_min_radius().
double volume_deficit(const RadialAleModel& model, double r);

struct RenormalizedVolume {
  double value = 0.0;
  double error = 0.0;
  ConvergenceTable table;
};

/// Richardson extrapolation of volume_deficit in r^{-m}. Throws ScheduleTooShort
/// when the schedule stops below 32 length scales or the final error estimate exceeds
/// 1e-3 relative.
RenormalizedVolume renormalized_volume(const RadialAleModel& model,
                                       const std::vector<double>& schedule);

/// Least-squares fit of matrix samples q_ij(x) = T_ikjl x^k x^l over a sphere grid.
struct QuadraticFormFit {
  Tensor4 coefficients;  // symmetric in (i, j) and in (k, l)
  std::vector<Matrix> fitted;
  double fit_residual = 0.0;  // relative weighted L2 residual
  double condition_number = 1.0;
};

/// Design matrices above this condition number raise FitIllConditioned.
inline constexpr double kMaxFitCondition = 1e10;

QuadraticFormFit fit_quadratic_form(const SphereGrid& grid, const std::vector<Matrix>& samples);
std::vector<Matrix> evaluate_quadratic_form(const Tensor4& t, const SphereGrid& grid);
double sphere_l2_norm(const SphereGrid& grid, const std::vector<Matrix>& samples);
double sphere_inner(const SphereGrid& grid, const std::vector<Matrix>& a,
                    const std::vector<Matrix>& b);

/// Weyl tensor whose quadratic form best matches a fitted form. Quadratic forms
/// determine T only up to rearrangements that leave T_ikjl x^k x^l unchanged; the
/// Weyl projection restricted to symmetrized Weyl tensors is 3/4 of the identity,
/// so W = 4/3 P_Weyl(T).
WeylTensor weyl_from_quadratic_form(const Tensor4& t);

struct WeylFitAtRadius {
  double radius = 0.0;
  Tensor4 weyl;
  double amplitude = 0.0;       // weighted L2 norm of r^m (g - delta)
  double fit_residual = 0.0;
  double gauge_residual = 0.0;  // |q_T - q_W| / |q_T|
  double condition_number = 1.0;
};

struct AsymptoticWeyl {
  WeylTensor weyl;
  double gauge_residual = 0.0;
  double extrapolation_error = 0.0;  // relative
  double bianchi_residual = 0.0;     // r |B_E(g - delta)| / |g - delta| at the largest radius
  std::vector<WeylFitAtRadius> per_radius;
  ConvergenceTable table;  // |W(r)| with its extrapolation
};

AsymptoticWeyl extract_asymptotic_weyl(const RadialAleModel& model, const std::vector<double>& radii,
                                       const SphereGrid& grid);
AsymptoticWeyl extract_asymptotic_weyl(const RadialAleModel& model, const std::vector<double>& radii);

struct AleInvariants {
  int dim = 0;
  int group_order = 1;
  double renormalized_volume = 0.0;
  double volume_error = 0.0;
  WeylTensor asymptotic_weyl;
  double gauge_residual = 0.0;
  double bianchi_residual = 0.0;
  double extrapolation_error = 0.0;
  std::vector<double> fit_radii;
  ConvergenceTable volume_table;
  ConvergenceTable weyl_table;
};

AleInvariants compute_invariants(const RadialAleModel& model, const std::vector<double>& schedule);

/// Exponent tau of the fitted decay |g - delta| ~ r^{-tau}.
double ale_decay_exponent(const RadialAleModel& model, const std::vector<double>& radii);

struct ScaleInvarianceReport {
  double lambda = 1.0;
  double volume = 0.0;
  double volume_scaled = 0.0;
  double weyl_norm = 0.0;
  double weyl_norm_scaled = 0.0;
  double volume_ratio_error = 0.0;  // relative deviation from lambda^m (0 when both vanish)
  double weyl_ratio_error = 0.0;
};

ScaleInvarianceReport scale_invariance_check(const RadialAleModel& model, double lambda);

}  // namespace alegeo
