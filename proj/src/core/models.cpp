#include "alegeo/core/models.hpp"

#include "alegeo/core/error.hpp"
#include "alegeo/core/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alegeo {

Jet2 RadialAleModel::radial_volume_deficit(const Jet2& r) const {
  return radial_volume_density(r) - Jet2(flat_density_coefficient()) * pow(r, dim() - 1);
}

Jet2 RadialAleModel::radial_flux_deficit(const Jet2& r) const {
  return radial_flux_density(r) - Jet2(flat_density_coefficient()) * pow(r, dim() - 1);
}

double RadialAleModel::flat_density_coefficient() const {
  return sphere_area(dim()) / group_order();
}

namespace {

class FlatCone final : public RadialAleModel {
 public:
  FlatCone(int m, int group_order)
      : m_(m), order_(group_order), chart_(std::make_shared<EuclideanChart>(m)) {}

  std::string name() const override { return "flat"; }
  int dim() const override { return m_; }
  int group_order() const override { return order_; }
  double core_radius() const override { return 0.0; }
  std::shared_ptr<const MetricChart> chart() const override { return chart_; }
  double chart_min_radius() const override { return 0.0; }

  double core_profile() const override { return 0.0; }
  Jet2 profile_of_radius(const Jet2& r) const override { return r; }
  double radius_of_profile(double s) const override { return s; }
  Jet2 profile_volume_density(const Jet2& s) const override { return density(s); }
  Jet2 profile_speed_sq(const Jet2&) const override { return Jet2(1.0); }
  std::vector<double> level_set_curvatures(double s) const override {
    return std::vector<double>(static_cast<std::size_t>(m_ - 1), 1.0 / s);
  }
  Jet2 radial_volume_density(const Jet2& r) const override { return density(r); }
  Jet2 radial_flux_density(const Jet2& r) const override { return density(r); }
  Jet2 radial_volume_deficit(const Jet2&) const override { return Jet2(0.0); }
  Jet2 radial_flux_deficit(const Jet2&) const override { return Jet2(0.0); }

  std::unique_ptr<RadialAleModel> rescaled(double) const override {
    return std::make_unique<FlatCone>(m_, order_);
  }

 private:
  Jet2 density(const Jet2& r) const { return Jet2(flat_density_coefficient()) * pow(r, m_ - 1); }

  int m_;
  int order_;
  std::shared_ptr<const MetricChart> chart_;
};

// Eguchi-Hanson space with bolt radius a, asymptotic to R^4/Z2.
//
// In the radial form g = f^{-1} drho^2 + rho^2/4 (s1^2 + s2^2 + f s3^2),
// f = 1 - a^4/rho^4, the ALE radius r is defined by rho = r + a^4/(6 r^3). In the
// Cartesian chart x with |x| = r this gives g = delta + O(r^-4) with a leading term
// of pure Weyl type. J is the complex structure whose orbits are the s3 fibres.
class EguchiHanson final : public RadialAleModel {
 public:
  explicit EguchiHanson(double a) : a_(a), a4_(a * a * a * a) {
    Matrix j = Matrix::Zero(4, 4);
    j(0, 1) = -1;
    j(1, 0) = 1;
    j(2, 3) = -1;
    j(3, 2) = 1;
    const double a4 = a4_;
    auto profile = [a4](const Jet2& r) {
      const Jet2 r2 = r * r;
      const Jet2 e = Jet2(a4 / 6.0) / (r2 * r);
      const Jet2 rho = r + e;
      const Jet2 rho4 = pow(rho, 4);
      const Jet2 beta_m1 = e * (rho + r) / r2;
      const Jet2 beta = Jet2(1.0) + beta_m1;
      const Jet2 f = Jet2(1.0) - Jet2(a4) / rho4;
      // rho'^2 - f = -a^4 (rho^4 - r^4) / (rho^4 r^4) + a^8 / (4 r^8)
      const Jet2 r4 = r2 * r2;
      const Jet2 diff4 = e * (rho + r) * (rho * rho + r2);
      const Jet2 alpha_m1 = (Jet2(-a4) * diff4 / (rho4 * r4) + Jet2(a4 * a4 / 4.0) / (r4 * r4)) / f;
      RadialProfile pr;
      pr.beta_m1 = beta_m1;
      pr.p = (alpha_m1 - beta_m1) / r2;
      pr.q = -(Jet2(a4) / rho4) * beta / r2;
      return pr;
    };
    chart_ = std::make_shared<RadialStructuredChart>(4, profile, a, -1.0, j);
  }

  std::string name() const override { return "eguchi-hanson"; }
  int dim() const override { return 4; }
  int group_order() const override { return 2; }
  double core_radius() const override { return a_; }
  std::shared_ptr<const MetricChart> chart() const override { return chart_; }
  double chart_min_radius() const override { return a_; }

  double core_profile() const override { return a_; }
  Jet2 profile_of_radius(const Jet2& r) const override { return r + Jet2(a4_ / 6.0) / pow(r, 3); }

  double radius_of_profile(double s) const override {
    const double rho_min = 7.0 * a_ / 6.0;
    require(s >= rho_min * (1 - 1e-12), ErrorCode::OutOfDomain,
            "profile value below the chart range");
    if (s <= rho_min) return a_;
    double r = s;
    for (int it = 0; it < 100; ++it) {
      const double g = r + a4_ / (6 * r * r * r) - s;
      const double dg = 1 - a4_ / (2 * r * r * r * r);
      const double step = g / dg;
      r -= step;
      if (std::abs(step) <= 1e-16 * r) break;
    }
    return r;
  }

  Jet2 profile_volume_density(const Jet2& s) const override {
    return Jet2(std::numbers::pi * std::numbers::pi) * pow(s, 3);
  }
  Jet2 profile_speed_sq(const Jet2& s) const override { return Jet2(1.0) - Jet2(a4_) / pow(s, 4); }
  std::vector<double> level_set_curvatures(double rho) const override {
    const double f = 1 - a4_ / std::pow(rho, 4);
    const double df = 4 * a4_ / std::pow(rho, 5);
    const double k12 = std::sqrt(f) / rho;
    const double k3 = (f + 0.5 * rho * df) / (rho * std::sqrt(f));
    return {k12, k12, k3};
  }

  Jet2 radial_volume_density(const Jet2& r) const override {
    const Jet2 rho = profile_of_radius(r);
    const Jet2 drho = Jet2(1.0) - Jet2(a4_ / 2.0) / pow(r, 4);
    return Jet2(std::numbers::pi * std::numbers::pi) * pow(rho, 3) * drho;
  }
  Jet2 radial_flux_density(const Jet2& r) const override {
    const Jet2 rho = profile_of_radius(r);
    const Jet2 drho = Jet2(1.0) - Jet2(a4_ / 2.0) / pow(r, 4);
    return Jet2(std::numbers::pi * std::numbers::pi) * (pow(rho, 4) - Jet2(a4_)) / (rho * drho);
  }
  // With e = rho - r = a^4 / (6 r^3):
  //   rho^3 rho' - r^3 = -6 r e^2 - 8 e^3 - 3 e^4 / r
  //   (rho^4 - a^4) / (rho rho') - r^3 = (9 r^2 e^2 + 4 r e^3 + e^4) / (rho rho')
  Jet2 radial_volume_deficit(const Jet2& r) const override {
    const Jet2 e = Jet2(a4_ / 6.0) / pow(r, 3);
    const Jet2 e2 = e * e;
    return Jet2(std::numbers::pi * std::numbers::pi) *
           (Jet2(-6.0) * r * e2 - Jet2(8.0) * e2 * e - Jet2(3.0) * e2 * e2 / r);
  }
  Jet2 radial_flux_deficit(const Jet2& r) const override {
    const Jet2 e = Jet2(a4_ / 6.0) / pow(r, 3);
    const Jet2 e2 = e * e;
    const Jet2 rho = r + e;
    const Jet2 drho = Jet2(1.0) - Jet2(a4_ / 2.0) / pow(r, 4);
    return Jet2(std::numbers::pi * std::numbers::pi) *
           (Jet2(9.0) * r * r * e2 + Jet2(4.0) * r * e2 * e + e2 * e2) / (rho * drho);
  }

  std::unique_ptr<RadialAleModel> rescaled(double lambda) const override {
    return std::make_unique<EguchiHanson>(lambda * a_);
  }

 private:
  double a_, a4_;
  std::shared_ptr<const MetricChart> chart_;
};

}  // namespace

std::unique_ptr<RadialAleModel> model_flat_cone(int m, int group_order) {
  require(m >= 3, ErrorCode::InvalidDimension, "flat cone needs dimension >= 3");
  require(group_order >= 1, ErrorCode::InvalidParameter, "group order must be >= 1");
  return std::make_unique<FlatCone>(m, group_order);
}

std::unique_ptr<RadialAleModel> model_eguchi_hanson(double a) {
  require(std::isfinite(a) && a > 0, ErrorCode::InvalidParameter,
          "Eguchi-Hanson bolt radius must be positive");
  return std::make_unique<EguchiHanson>(a);
}

double ricci_residual(const RadialAleModel& model, const std::vector<double>& radii) {
  const SphereGrid grid = make_sphere_grid(model.dim(), 3, 6);
  const auto chart = model.chart();
  double worst = 0.0;
  for (double r : radii)
    for (const Vector& u : grid.points) {
      const Vector x = r * u;
      const Connection c = connection(*chart, x);
      const Matrix ric = ricci(riemann(c), c.g);
      worst = std::max(worst, ric.cwiseAbs().maxCoeff());
    }
  return worst;
}

OrbifoldPointData orbifold_hyperbolic(int m, int group_order) {
  require(m >= 3, ErrorCode::InvalidDimension, "orbifold data needs dimension >= 3");
  require(group_order >= 1, ErrorCode::InvalidParameter, "group order must be >= 1");
  OrbifoldPointData d;
  d.dim = m;
  d.mu = -(m - 1.0);
  d.curvature = constant_curvature_tensor(Matrix::Identity(m, m), -1.0);
  d.weyl = WeylTensor::zero(m);
  d.group_order = group_order;
  d.preset = "hyperbolic";
  return d;
}

OrbifoldPointData orbifold_custom(int m, double mu, const WeylTensor& weyl, int group_order) {
  require(m >= 3, ErrorCode::InvalidDimension, "orbifold data needs dimension >= 3");
  require(weyl.dim() == m, ErrorCode::DimensionMismatch, "Weyl tensor dimension");
  require(group_order >= 1, ErrorCode::InvalidParameter, "group order must be >= 1");
  require(std::isfinite(mu), ErrorCode::InvalidParameter, "Einstein constant must be finite");
  OrbifoldPointData d;
  d.dim = m;
  d.mu = mu;
  d.weyl = weyl;
  d.curvature = einstein_curvature(weyl, Matrix::Identity(m, m), mu);
  d.group_order = group_order;
  d.preset = "custom";
  return d;
}

OrbifoldPointData orbifold_custom(int m, double mu, const Tensor4& weyl, int group_order) {
  require(weyl.dim() == m, ErrorCode::DimensionMismatch, "Weyl tensor dimension");
  return orbifold_custom(m, mu, WeylTensor::from_components(weyl, 1e-8), group_order);
}

double einstein_residual(const OrbifoldPointData& data) {
  const Matrix id = Matrix::Identity(data.dim, data.dim);
  return (ricci_contraction(data.curvature, id) - data.mu * id).cwiseAbs().maxCoeff();
}

}  // namespace alegeo
