#pragma once

#include "alegeo/core/chart.hpp"
#include "alegeo/core/curvature.hpp"
#include "alegeo/core/jet.hpp"

#include <memory>
#include <string>
#include <vector>

namespace alegeo {

/// Cohomogeneity-one Ricci-flat ALE space.
///
/// Two radial coordinates are used. The ALE radius r = |x| is the radius of the
/// Cartesian chart at infinity. The profile coordinate s parametrizes the level
/// sets all the way down to the core (s = core_profile()), where the ALE chart
/// may not reach. Volume densities refer to the quotient by the group.
class RadialAleModel {
 public:
  virtual ~RadialAleModel() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual int group_order() const = 0;
  /// Bolt size a (0 for a flat cone).
  virtual double core_radius() const = 0;
  double length_scale() const { return core_radius() > 0 ? core_radius() : 1.0; }

  virtual std::shared_ptr<const MetricChart> chart() const = 0;
  /// Smallest ALE radius covered by the chart.
  virtual double chart_min_radius() const = 0;

  virtual double core_profile() const = 0;
  virtual Jet2 profile_of_radius(const Jet2& r) const = 0;
  virtual double radius_of_profile(double s) const = 0;
  double ale_profile_start() const { return profile_of_radius(Jet2(chart_min_radius())).value(); }

  /// d Vol / ds of {profile <= s}.
  virtual Jet2 profile_volume_density(const Jet2& s) const = 0;
  /// |grad s|^2.
  virtual Jet2 profile_speed_sq(const Jet2& s) const = 0;
  /// Principal curvatures of the level set {profile = s} (m - 1 values).
  virtual std::vector<double> level_set_curvatures(double s) const = 0;

  /// d Vol / dr in the ALE radius, and its product with |grad r|^2.
  virtual Jet2 radial_volume_density(const Jet2& r) const = 0;
  virtual Jet2 radial_flux_density(const Jet2& r) const = 0;
  /// The same minus the flat-cone density area(S^{m-1}) r^{m-1} / |Gamma|,
  /// computed without cancellation.
  virtual Jet2 radial_volume_deficit(const Jet2& r) const;
  virtual Jet2 radial_flux_deficit(const Jet2& r) const;

  double flat_density_coefficient() const;  // area(S^{m-1}) / |Gamma|
  double volume_density(double r) const { return radial_volume_density(Jet2(r)).value(); }

  /// Radius function r_b: the ALE radius |x| on the chart.
  double radius_function(const Vector& x) const { return x.norm(); }

  /// Same space with metric lambda^2 g, realized by scaling the chart.
  virtual std::unique_ptr<RadialAleModel> rescaled(double lambda) const = 0;
};

std::unique_ptr<RadialAleModel> model_flat_cone(int m, int group_order);
std::unique_ptr<RadialAleModel> model_eguchi_hanson(double a);

/// Largest |Ric| entry over sphere samples at the given radii.
double ricci_residual(const RadialAleModel& model, const std::vector<double>& radii);

/// Einstein orbifold data at the singular point, in geodesic normal coordinates.
struct OrbifoldPointData {
  int dim = 0;
  double mu = 0.0;
  Tensor4 curvature;  // R_ijkl(0)
  WeylTensor weyl;    // W(0)
  int group_order = 1;
  std::string preset;  // "hyperbolic" or "custom"
};

OrbifoldPointData orbifold_hyperbolic(int m, int group_order);
OrbifoldPointData orbifold_custom(int m, double mu, const WeylTensor& weyl, int group_order);
/// Validates the components first; throws NotWeyl.
OrbifoldPointData orbifold_custom(int m, double mu, const Tensor4& weyl, int group_order);

/// max |Ric(R0) - mu id|.
double einstein_residual(const OrbifoldPointData& data);

}  // namespace alegeo
