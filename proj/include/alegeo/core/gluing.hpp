#pragma once

#include "alegeo/core/chart.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/sphere.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace alegeo {

/// Bubble: the ALE side N^delta, coordinates are ALE chart coordinates x.
/// Neck: the annulus A(t, delta), coordinates are orbifold coordinates y = t x.
/// Orbifold: M0^delta, coordinates y.
enum class Region { Bubble, Neck, Orbifold };

struct GluedPoint {
  Region region = Region::Orbifold;
  Vector coords;
};

/// Orbifold chart near p in geodesic normal coordinates: the hyperbolic model for the
/// hyperbolic preset, otherwise g_E + H(y) truncated at second order.
std::shared_ptr<const MetricChart> orbifold_chart(const OrbifoldPointData& data, double r_max);

/// Naive gluing of a scaled ALE model into an orbifold chart with t = delta^2 / 100.
class GluedGeometry {
 public:
  /// outer_radius <= 0 selects 4 delta.
  GluedGeometry(std::shared_ptr<const RadialAleModel> model,
                std::shared_ptr<const MetricChart> orbifold, double delta, double outer_radius = 0.0);

  double t() const { return t_; }
  double delta() const { return delta_; }
  double inner_seam() const { return t_ / delta_; }  // r_t where chi stops being 1
  double outer_seam() const { return delta_; }       // r_t where chi reaches 0
  double outer_radius() const { return outer_; }
  double min_radius() const { return r_min_; }        // smallest sampled r_t
  int dim() const { return model_->dim(); }
  const RadialAleModel& model() const { return *model_; }
  const MetricChart& bubble_chart() const { return *bubble_; }
  const MetricChart& orbifold() const { return *orbifold_; }

  /// chi(r): 1 below t / delta, 0 above delta, exp(-1/s) smoothstep in log r between.
  double cutoff(double r) const;

  /// Region tag and coordinates of the point at r_t in unit direction u.
  GluedPoint point_at(double r_t, const Vector& u) const;

  /// Deterministic log-radial times sphere sample set covering all three regions.
  std::vector<GluedPoint> sample_points(int n_radial, const SphereGrid& directions) const;

 private:
  std::shared_ptr<const RadialAleModel> model_;
  std::shared_ptr<const MetricChart> bubble_;
  std::shared_ptr<const MetricChart> orbifold_;
  double delta_, t_, outer_, r_min_;
};

/// t r_b on the bubble and the neck, d(p, .) = |y| on the neck and the orbifold.
/// Throws OutOfDomain for points outside their tagged region.
double radius_function(const GluedGeometry& geom, const GluedPoint& x);

/// r_b = |x| on the bubble, r_t / t elsewhere.
double bubble_radius(const GluedGeometry& geom, const GluedPoint& x);

/// t^2 g_b on the bubble (x coordinates), chi g_b(y / t) + (1 - chi) g0(y) on the neck,
/// g0 on the orbifold. Throws OutOfDomain.
Matrix gluing_metric(const GluedGeometry& geom, const GluedPoint& x);

/// The two reference metrics at a point: t^2 g_b and g0 in the point's coordinates.
/// The orbifold metric is empty on the bubble and the bubble metric on the orbifold region.
struct ReferenceMetrics {
  Matrix bubble;
  Matrix orbifold;
};
ReferenceMetrics reference_metrics(const GluedGeometry& geom, const GluedPoint& x);

using GluedField = std::function<Matrix(const GluedPoint&)>;

/// PointwiseSum takes sup_x of the sum of both weighted terms. SplitSum adds the two
/// suprema as in the two-term definition.
enum class WeightedNormKind { PointwiseSum, SplitSum };

struct WeightedNormSpec {
  int k = 0;
  double beta1 = 0.5;
  double beta2 = 0.5;
  WeightedNormKind kind = WeightedNormKind::PointwiseSum;
};

struct WeightedNormResult {
  double value = 0.0;
  double bubble_term = 0.0;    // sup r_b^beta1 chi |s|_{t^2 g_b}
  double orbifold_term = 0.0;  // sup r_t^-beta2 (1 - chi) |s|_{g0}
  double coarse_value = 0.0;
  double refinement_change = 0.0;  // relative
  int radial_nodes = 0;
};

inline constexpr int kDefaultRadialNodes = 96;

/// Relative change between grid levels that raises GridTooCoarse.
inline constexpr double kGridTolerance = 0.02;

/// C^0_{beta1, beta2}(g_t) norm on the sample grid, evaluated at n_radial and
/// 2 n_radial - 1 radial nodes. Throws GridTooCoarse or InvalidArgument (k != 0).
WeightedNormResult weighted_norm_C0(const GluedGeometry& geom, const GluedField& s,
                                    const WeightedNormSpec& spec,
                                    int n_radial = kDefaultRadialNodes);

/// Per-radius grid report, maximised over the sphere grid. Columns: r_t, region, chi,
/// min_metric_eigenvalue (bubble metric divided by t^2), bubble_term, orbifold_term.
std::string weighted_norm_profile_csv(const GluedGeometry& geom, const GluedField& s,
                                      const WeightedNormSpec& spec,
                                      int n_radial = kDefaultRadialNodes);

/// The piecewise profile f with |s| <= f(r_t) equivalent to a unit weighted norm.
double weight_profile(const GluedGeometry& geom, double beta1, double beta2, double r);

}  // namespace alegeo
