#pragma once

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/operators.hpp"

#include <memory>
#include <string>
#include <vector>

namespace alegeo {

/// Radial derivatives of u = r^2 + v at an ALE radius.
struct RadialDerivatives {
  double v = 0.0;  // only filled where available (ODE samples)
  double dv = 0.0;
  double d2v = 0.0;
  double du() const;
  double d2u() const;
  double r = 0.0;
};

struct PoissonSample {
  double r = 0.0;
  double u = 0.0;
  double du = 0.0;
  double d2u = 0.0;
};

struct PoissonOptions {
  double r_max_scales = 128.0;  // outer radius in length scales
  double rel_tol = 1e-10;
  int samples = 257;
};

/// Solution of Delta u = 2m, u = r^2 + o(1) on a radial ALE model.
class RadialPoissonSolution {
 public:
  RadialPoissonSolution(std::shared_ptr<const RadialAleModel> model, double b, double c,
                        double fit_lo, double fit_hi, double residual, double core_flux,
                        std::vector<PoissonSample> samples);

  const RadialAleModel& model() const { return *model_; }
  std::shared_ptr<const RadialAleModel> model_ptr() const { return model_; }

  double b_coeff() const { return b_; }
  double c_coeff() const { return c_; }
  double fit_lo() const { return fit_lo_; }
  double fit_hi() const { return fit_hi_; }
  double residual_norm() const { return residual_; }
  const std::vector<PoissonSample>& samples() const { return samples_; }

  /// v', v'' at ALE radius r from the first integral of the radial equation.
  RadialDerivatives radial(double r) const;
  /// u_s and the radial Hessian eigenvalue N u_ss + N' u_s / 2 in the profile
  /// coordinate, written without division by N so it stays accurate at the core.
  std::pair<double, double> profile_derivatives(double s) const;

  /// Delta_g u - 2m at a chart point, computed from the chart connection.
  double laplacian_residual(const Vector& x) const;

  std::string to_csv() const;  // r, u, u', u''

 private:
  double flux_deficit_integral(double r) const;  // D(r) = 2m (Vol(Omega_r) - Vol_E(B_r))

  std::shared_ptr<const RadialAleModel> model_;
  double b_, c_, fit_lo_, fit_hi_, residual_;
  double core_flux_;  // D at chart_min_radius
  std::vector<PoissonSample> samples_;
};

RadialPoissonSolution solve_poisson_radial(std::shared_ptr<const RadialAleModel> model,
                                           const PoissonOptions& options = {});

/// (2 - m) / (2m) * area(S^{m-1}) / |Gamma| * b.
double poisson_volume(const RadialAleModel& model, const RadialPoissonSolution& sol);

/// The traceless Lie derivative 2 Hess u - 4 g on the ALE chart.
class DeformationField final : public Sym2Field {
 public:
  explicit DeformationField(std::shared_ptr<const RadialPoissonSolution> sol);
  int dim() const override { return sol_->model().dim(); }
  Matrix value(const Vector& x) const override;

 private:
  std::shared_ptr<const RadialPoissonSolution> sol_;
};

struct ExpansionFit {
  double radius = 0.0;
  double volume_block = 0.0;  // coefficient of (m x^x^ - delta) r^{-m}
  Tensor4 weyl_block;         // W' in W'_ikjl x^k x^l r^{-m-2}
  double residual = 0.0;      // absolute weighted L2 norm of the r^m-scaled remainder
};

struct ExplicitDeformation {
  std::shared_ptr<const DeformationField> field;
  double volume_block = 0.0;  // extrapolated
  WeylTensor weyl_block;      // extrapolated
  double residual_slope = 0.0;
  std::vector<ExpansionFit> fits;
  double l2_norm = 0.0;
};

/// Builds the field, fits both expansion blocks at the given radii and computes
/// the L2 norm. Throws ExpansionFitFailure when the remainder does not decay
/// faster than r^{-m}.
ExplicitDeformation explicit_deformation(std::shared_ptr<const RadialPoissonSolution> sol,
                                         const std::vector<double>& radii);

/// L2(g_b) norm of 2 Hess u - 4 g by radial quadrature in the profile coordinate.
double deformation_l2_norm(const RadialPoissonSolution& sol);

}  // namespace alegeo
