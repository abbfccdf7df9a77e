#pragma once

#include "alegeo/core/jet.hpp"
#include "alegeo/core/tensor.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace alegeo {

/// Metric components with first and second coordinate derivatives at a point.
/// dg[k](i, j) = d_k g_ij and ddg[k * m + l](i, j) = d_k d_l g_ij.
struct MetricJet {
  Matrix g;
  std::vector<Matrix> dg;
  std::vector<Matrix> ddg;

  int dim() const { return static_cast<int>(g.rows()); }
  const Matrix& second(int k, int l) const { return ddg[static_cast<std::size_t>(k * dim() + l)]; }
};

enum class DerivativeMode { Analytic, FiniteDifference };

/// Metric charts reject points whose metric condition number exceeds this.
inline constexpr double kMaxMetricCondition = 1e12;

/// Fourth-order central difference step used throughout.
double fd_step(const Vector& x);

/// Fourth-order central difference of a vector-space-valued function along
/// coordinate k with step h.
template <class F>
auto central_difference(const F& f, const Vector& x, int k, double h) {
  Vector p1 = x, p2 = x, m1 = x, m2 = x;
  p1(k) += h;
  p2(k) += 2 * h;
  m1(k) -= h;
  m2(k) -= 2 * h;
  using R = std::decay_t<decltype(f(x))>;
  R out = (8.0 * (f(p1) - f(m1)) - (f(p2) - f(m2))) / (12.0 * h);
  return out;
}

/// Coordinate chart carrying a Riemannian metric.
class MetricChart {
 public:
  virtual ~MetricChart() = default;

  virtual int dim() const = 0;
  virtual bool contains(const Vector& x) const = 0;

  /// g_ij(x) without domain or conditioning checks.
  virtual Matrix metric(const Vector& x) const = 0;

  /// g_ij(x) - delta_ij, overridable where the subtraction loses digits.
  virtual Matrix deviation(const Vector& x) const;

  /// Metric with derivatives. The default uses nested finite differences of metric().
  virtual MetricJet jet(const Vector& x) const;

  virtual DerivativeMode mode() const { return DerivativeMode::FiniteDifference; }

  /// Checked evaluation: throws OutOfDomain or SingularMetric.
  MetricJet checked_jet(const Vector& x) const;
  Matrix checked_metric(const Vector& x) const;
  void check_point(const Vector& x) const;
};

/// Metric jet from nested finite differences of chart.metric().
MetricJet finite_difference_jet(const MetricChart& chart, const Vector& x);

/// Euclidean metric on R^m (optionally restricted to |x| in [r_min, r_max]).
class EuclideanChart final : public MetricChart {
 public:
  explicit EuclideanChart(int dim, double r_min = 0.0, double r_max = -1.0);
  int dim() const override { return dim_; }
  bool contains(const Vector& x) const override;
  Matrix metric(const Vector& x) const override;
  Matrix deviation(const Vector& x) const override;
  MetricJet jet(const Vector& x) const override;
  DerivativeMode mode() const override { return DerivativeMode::Analytic; }

 private:
  int dim_;
  double r_min_, r_max_;
};

/// Radial profile functions of g = (1 + beta_m1) delta + p x x^T + q (Jx)(Jx)^T,
/// as jets in r = |x|.
struct RadialProfile {
  Jet2 beta_m1;  // beta - 1
  Jet2 p;
  Jet2 q;
};

/// Metrics of the form (1 + beta_m1(r)) delta + p(r) x x^T + q(r) (Jx)(Jx)^T with
/// analytic derivatives.
class RadialStructuredChart final : public MetricChart {
 public:
  using ProfileFn = std::function<RadialProfile(const Jet2& r)>;

  RadialStructuredChart(int dim, ProfileFn profile, double r_min, double r_max,
                        std::optional<Matrix> complex_structure);

  int dim() const override { return dim_; }
  bool contains(const Vector& x) const override;
  Matrix metric(const Vector& x) const override;
  Matrix deviation(const Vector& x) const override;
  MetricJet jet(const Vector& x) const override;
  DerivativeMode mode() const override { return DerivativeMode::Analytic; }

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }

 private:
  int dim_;
  ProfileFn profile_;
  double r_min_, r_max_;
  std::optional<Matrix> j_;
};

/// Chart given by callbacks; used for hand-written test metrics and orbifold charts.
class FunctionChart final : public MetricChart {
 public:
  using MetricFn = std::function<Matrix(const Vector&)>;
  using JetFn = std::function<MetricJet(const Vector&)>;
  using DomainFn = std::function<bool(const Vector&)>;

  FunctionChart(int dim, MetricFn metric, DomainFn domain, JetFn jet = {});

  int dim() const override { return dim_; }
  bool contains(const Vector& x) const override { return domain_(x); }
  Matrix metric(const Vector& x) const override { return metric_(x); }
  MetricJet jet(const Vector& x) const override;
  DerivativeMode mode() const override {
    return jet_ ? DerivativeMode::Analytic : DerivativeMode::FiniteDifference;
  }

 private:
  int dim_;
  MetricFn metric_;
  DomainFn domain_;
  JetFn jet_;
};

/// Wraps a chart and forces finite-difference derivatives (cross-check oracle).
class FiniteDifferenceChart final : public MetricChart {
 public:
  explicit FiniteDifferenceChart(std::shared_ptr<const MetricChart> base);
  int dim() const override { return base_->dim(); }
  bool contains(const Vector& x) const override { return base_->contains(x); }
  Matrix metric(const Vector& x) const override { return base_->metric(x); }
  Matrix deviation(const Vector& x) const override { return base_->deviation(x); }

 private:
  std::shared_ptr<const MetricChart> base_;
};

/// Hyperbolic space of curvature -1 in geodesic normal coordinates,
/// g = dr^2 + sinh(r)^2 g_{S^{m-1}}, written in Cartesian form.
std::shared_ptr<const MetricChart> hyperbolic_normal_chart(int dim, double r_max);

/// Unit round sphere S^m via stereographic coordinates, g = 4 / (1 + |x|^2)^2 delta.
std::shared_ptr<const MetricChart> stereographic_sphere_chart(int dim);

/// Polar-coordinate surface of revolution dr^2 + w(r)^2 dtheta^2, x = (r, theta).
std::shared_ptr<const MetricChart> surface_of_revolution_chart(
    std::function<Jet2(const Jet2&)> warp, double r_min, double r_max);

}  // namespace alegeo
