#include "alegeo/core/gluing.hpp"

#include "alegeo/core/error.hpp"
#include "alegeo/core/numerics.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace alegeo {

namespace {

// Relative slack when matching a point to its region.
constexpr double kSeamSlack = 1e-12;

double smooth_exp(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

}  // namespace

std::shared_ptr<const MetricChart> orbifold_chart(const OrbifoldPointData& data, double r_max) {
  require(r_max > 0.0, ErrorCode::InvalidParameter, "orbifold chart radius must be positive");
  if (data.preset == "hyperbolic") return hyperbolic_normal_chart(data.dim, r_max);
  auto h = std::make_shared<QuadraticTensorH>(data);
  const int m = data.dim;
  return std::make_shared<FunctionChart>(
      m, [h, m](const Vector& y) -> Matrix { return Matrix::Identity(m, m) + h->value(y); },
      [r_max](const Vector& y) { return y.norm() <= r_max; },
      [h, m](const Vector& y) {
        const SymJet j = h->jet(y, 2);
        MetricJet out;
        out.g = Matrix::Identity(m, m) + j.h;
        out.dg = j.dh;
        out.ddg = j.ddh;
        return out;
      });
}

GluedGeometry::GluedGeometry(std::shared_ptr<const RadialAleModel> model,
                             std::shared_ptr<const MetricChart> orbifold, double delta,
                             double outer_radius)
    : model_(std::move(model)), orbifold_(std::move(orbifold)), delta_(delta) {
  require(model_ && orbifold_, ErrorCode::InvalidArgument, "glued geometry needs both pieces");
  require(model_->dim() == orbifold_->dim(), ErrorCode::DimensionMismatch,
          "model and orbifold chart dimensions differ");
  require(delta > 0.0 && delta < 1.0, ErrorCode::InvalidParameter, "delta must lie in (0, 1)");
  t_ = delta * delta / 100.0;
  outer_ = outer_radius > 0.0 ? outer_radius : 4.0 * delta;
  require(outer_ > delta, ErrorCode::InvalidParameter, "outer radius must exceed delta");
  bubble_ = model_->chart();
  const double rb_min = std::max(model_->chart_min_radius() * (1.0 + 1e-9), 0.5 * model_->length_scale());
  require(rb_min < 1.0 / delta, ErrorCode::InvalidParameter,
          "delta too large: the bubble region lies inside the model core");
  r_min_ = t_ * rb_min;
  Vector probe = Vector::Zero(dim());
  probe(0) = outer_;
  require(orbifold_->contains(probe), ErrorCode::OutOfDomain,
          "orbifold chart does not reach the outer radius");
}

double GluedGeometry::cutoff(double r) const {
  const double lo = inner_seam(), hi = outer_seam();
  if (r <= lo) return 1.0;
  if (r >= hi) return 0.0;
  const double s = std::log(r / lo) / std::log(hi / lo);
  const double a = smooth_exp(s), b = smooth_exp(1.0 - s);
  return b / (a + b);
}

GluedPoint GluedGeometry::point_at(double r_t, const Vector& u) const {
  GluedPoint p;
  if (r_t < inner_seam()) {
    p.region = Region::Bubble;
    p.coords = (r_t / t_) * u;
  } else if (r_t <= outer_seam()) {
    p.region = Region::Neck;
    p.coords = r_t * u;
  } else {
    p.region = Region::Orbifold;
    p.coords = r_t * u;
  }
  return p;
}

std::vector<GluedPoint> GluedGeometry::sample_points(int n_radial,
                                                     const SphereGrid& directions) const {
  require(n_radial >= 2, ErrorCode::InvalidArgument, "need at least two radial nodes");
  require(directions.dim == dim(), ErrorCode::DimensionMismatch, "direction grid dimension");
  std::vector<double> radii = log_space(r_min_, outer_, n_radial);
  radii.push_back(inner_seam());
  radii.push_back(outer_seam());
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::vector<GluedPoint> out;
  out.reserve(radii.size() * directions.size());
  for (double r : radii)
    for (const Vector& u : directions.points) out.push_back(point_at(r, u));
  return out;
}

double radius_function(const GluedGeometry& geom, const GluedPoint& x) {
  const double n = x.coords.norm();
  require(x.coords.size() == geom.dim(), ErrorCode::DimensionMismatch, "point dimension");
  switch (x.region) {
    case Region::Bubble: {
      require(n > 0.0 && n <= (1.0 + kSeamSlack) / geom.delta(), ErrorCode::OutOfDomain,
              "bubble point outside r_b <= 1/delta");
      return geom.t() * n;
    }
    case Region::Neck:
      require(n >= geom.inner_seam() * (1.0 - kSeamSlack) && n <= geom.outer_seam() * (1.0 + kSeamSlack),
              ErrorCode::OutOfDomain, "neck point outside t/delta <= r_t <= delta");
      return n;
    case Region::Orbifold:
      require(n >= geom.outer_seam() * (1.0 - kSeamSlack) && n <= geom.outer_radius() * (1.0 + kSeamSlack),
              ErrorCode::OutOfDomain, "orbifold point outside delta <= r_t <= outer radius");
      return n;
  }
  fail(ErrorCode::OutOfDomain, "unknown region");
}

double bubble_radius(const GluedGeometry& geom, const GluedPoint& x) {
  return x.region == Region::Bubble ? x.coords.norm() : radius_function(geom, x) / geom.t();
}

ReferenceMetrics reference_metrics(const GluedGeometry& geom, const GluedPoint& x) {
  radius_function(geom, x);  // domain check
  ReferenceMetrics out;
  const double t = geom.t();
  switch (x.region) {
    case Region::Bubble:
      out.bubble = t * t * geom.bubble_chart().checked_metric(x.coords);
      break;
    case Region::Neck:
      // t^2 g_b written in y = t x has the components of g_b at y / t.
      out.bubble = geom.bubble_chart().checked_metric(x.coords / t);
      out.orbifold = geom.orbifold().checked_metric(x.coords);
      break;
    case Region::Orbifold:
      out.orbifold = geom.orbifold().checked_metric(x.coords);
      break;
  }
  return out;
}

Matrix gluing_metric(const GluedGeometry& geom, const GluedPoint& x) {
  const ReferenceMetrics ref = reference_metrics(geom, x);
  if (x.region == Region::Bubble) return ref.bubble;
  if (x.region == Region::Orbifold) return ref.orbifold;
  const double chi = geom.cutoff(radius_function(geom, x));
  return chi * ref.bubble + (1.0 - chi) * ref.orbifold;
}

namespace {

struct GridNorm {
  double pointwise = 0.0;
  double bubble = 0.0;
  double orbifold = 0.0;
};

GridNorm grid_norm(const GluedGeometry& geom, const GluedField& s, const WeightedNormSpec& spec,
                   int n_radial, const SphereGrid& directions) {
  GridNorm out;
  for (const GluedPoint& p : geom.sample_points(n_radial, directions)) {
    const double r = radius_function(geom, p);
    const double chi = geom.cutoff(r);
    const ReferenceMetrics ref = reference_metrics(geom, p);
    const Matrix v = s(p);
    double nb = 0.0, no = 0.0;
    if (chi > 0.0)
      nb = std::pow(bubble_radius(geom, p), spec.beta1) * chi *
           tensor_norm(v, ref.bubble.inverse());
    if (chi < 1.0) no = std::pow(r, -spec.beta2) * (1.0 - chi) * tensor_norm(v, ref.orbifold.inverse());
    out.pointwise = std::max(out.pointwise, nb + no);
    out.bubble = std::max(out.bubble, nb);
    out.orbifold = std::max(out.orbifold, no);
  }
  return out;
}

}  // namespace

WeightedNormResult weighted_norm_C0(const GluedGeometry& geom, const GluedField& s,
                                    const WeightedNormSpec& spec, int n_radial) {
  require(spec.k == 0, ErrorCode::InvalidArgument, "only k = 0 weighted norms are supported");
  require(spec.beta1 > 0.0 && spec.beta2 > 0.0, ErrorCode::InvalidParameter,
          "weights must be positive");
  const int m = geom.dim();
  const SphereGrid directions = make_sphere_grid(m, 4, 8);
  auto value_of = [&](const GridNorm& g) {
    return spec.kind == WeightedNormKind::PointwiseSum ? g.pointwise : g.bubble + g.orbifold;
  };
  const GridNorm coarse = grid_norm(geom, s, spec, n_radial, directions);
  const GridNorm fine = grid_norm(geom, s, spec, 2 * n_radial - 1, directions);
  WeightedNormResult out;
  out.radial_nodes = 2 * n_radial - 1;
  out.value = value_of(fine);
  out.coarse_value = value_of(coarse);
  out.bubble_term = fine.bubble;
  out.orbifold_term = fine.orbifold;
  out.refinement_change = out.value > 0.0 ? std::abs(out.value - out.coarse_value) / out.value : 0.0;
  require(out.refinement_change <= kGridTolerance, ErrorCode::GridTooCoarse,
          "weighted norm changed by " + std::to_string(out.refinement_change) +
              " under radial refinement");
  return out;
}

std::string weighted_norm_profile_csv(const GluedGeometry& geom, const GluedField& s,
                                      const WeightedNormSpec& spec, int n_radial) {
  require(spec.k == 0, ErrorCode::InvalidArgument, "only k = 0 weighted norms are supported");
  const SphereGrid directions = make_sphere_grid(geom.dim(), 4, 8);
  const std::vector<GluedPoint> pts = geom.sample_points(n_radial, directions);
  std::ostringstream os;
  os << std::setprecision(17) << "r_t,region,chi,min_metric_eigenvalue,bubble_term,orbifold_term\n";
  const std::size_t per = directions.size();
  static const char* names[] = {"bubble", "neck", "orbifold"};
  for (std::size_t i = 0; i < pts.size(); i += per) {
    const double r = radius_function(geom, pts[i]);
    const double chi = geom.cutoff(r);
    double eig = INFINITY, nb = 0.0, no = 0.0;
    for (std::size_t k = i; k < i + per; ++k) {
      const GluedPoint& p = pts[k];
      Matrix g = gluing_metric(geom, p);
      if (p.region == Region::Bubble) g /= geom.t() * geom.t();
      eig = std::min(eig, Eigen::SelfAdjointEigenSolver<Matrix>(g).eigenvalues()(0));
      const ReferenceMetrics ref = reference_metrics(geom, p);
      const Matrix v = s(p);
      if (chi > 0.0)
        nb = std::max(nb, std::pow(bubble_radius(geom, p), spec.beta1) * chi * tensor_norm(v, ref.bubble.inverse()));
      if (chi < 1.0)
        no = std::max(no, std::pow(r, -spec.beta2) * (1.0 - chi) * tensor_norm(v, ref.orbifold.inverse()));
    }
    os << r << ',' << names[static_cast<int>(pts[i].region)] << ',' << chi << ',' << eig << ',' << nb
       << ',' << no << '\n';
  }
  return os.str();
}

double weight_profile(const GluedGeometry& geom, double beta1, double beta2, double r) {
  const double t = geom.t(), d = geom.delta();
  if (r < t / d) return std::pow(t / d, beta2) + std::pow(d, beta1);
  if (r > d) return std::pow(d, beta2) + std::pow(t / d, beta1);
  return std::pow(r, beta2) + std::pow(t / r, beta1);
}

}  // namespace alegeo
