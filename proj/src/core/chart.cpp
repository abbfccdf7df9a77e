#include "alegeo/core/chart.hpp"

#include "alegeo/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace alegeo {

double fd_step(const Vector& x) { return 1e-3 * std::max(1.0, x.norm()); }

Matrix MetricChart::deviation(const Vector& x) const {
  return metric(x) - Matrix::Identity(dim(), dim());
}

MetricJet MetricChart::jet(const Vector& x) const { return finite_difference_jet(*this, x); }

void MetricChart::check_point(const Vector& x) const {
  require(x.size() == dim(), ErrorCode::DimensionMismatch,
          "point has " + std::to_string(x.size()) + " coordinates, chart has dimension " +
              std::to_string(dim()));
  require(contains(x), ErrorCode::OutOfDomain, "point outside chart domain");
  const Matrix g = metric(x);
  require(g.allFinite() && spd_condition_number(g) <= kMaxMetricCondition,
          ErrorCode::SingularMetric, "metric is singular or too badly conditioned");
}

MetricJet MetricChart::checked_jet(const Vector& x) const {
  check_point(x);
  return jet(x);
}

Matrix MetricChart::checked_metric(const Vector& x) const {
  check_point(x);
  return metric(x);
}

MetricJet finite_difference_jet(const MetricChart& chart, const Vector& x) {
  const int m = chart.dim();
  const double h = fd_step(x);
  MetricJet j;
  j.g = chart.metric(x);
  auto g = [&](const Vector& y) { return chart.metric(y); };
  j.dg.resize(static_cast<std::size_t>(m));
  j.ddg.resize(static_cast<std::size_t>(m * m));
  for (int k = 0; k < m; ++k) j.dg[static_cast<std::size_t>(k)] = central_difference(g, x, k, h);
  for (int k = 0; k < m; ++k)
    for (int l = k; l < m; ++l) {
      auto dl = [&](const Vector& y) -> Matrix { return central_difference(g, y, l, h); };
      const Matrix d2 = central_difference(dl, x, k, h);
      j.ddg[static_cast<std::size_t>(k * m + l)] = d2;
      j.ddg[static_cast<std::size_t>(l * m + k)] = d2;
    }
  return j;
}

EuclideanChart::EuclideanChart(int dim, double r_min, double r_max)
    : dim_(dim), r_min_(r_min), r_max_(r_max) {
  require(dim >= 1, ErrorCode::InvalidDimension, "Euclidean chart needs dimension >= 1");
}

bool EuclideanChart::contains(const Vector& x) const {
  const double r = x.norm();
  return x.allFinite() && r >= r_min_ && (r_max_ < 0 || r <= r_max_);
}

Matrix EuclideanChart::metric(const Vector&) const { return Matrix::Identity(dim_, dim_); }

Matrix EuclideanChart::deviation(const Vector&) const { return Matrix::Zero(dim_, dim_); }

MetricJet EuclideanChart::jet(const Vector&) const {
  MetricJet j;
  j.g = Matrix::Identity(dim_, dim_);
  j.dg.assign(static_cast<std::size_t>(dim_), Matrix::Zero(dim_, dim_));
  j.ddg.assign(static_cast<std::size_t>(dim_ * dim_), Matrix::Zero(dim_, dim_));
  return j;
}

RadialStructuredChart::RadialStructuredChart(int dim, ProfileFn profile, double r_min, double r_max,
                                             std::optional<Matrix> complex_structure)
    : dim_(dim), profile_(std::move(profile)), r_min_(r_min), r_max_(r_max),
      j_(std::move(complex_structure)) {
  require(dim >= 2, ErrorCode::InvalidDimension, "radial chart needs dimension >= 2");
  require(!j_ || (j_->rows() == dim && j_->cols() == dim), ErrorCode::DimensionMismatch,
          "complex structure has wrong size");
}

bool RadialStructuredChart::contains(const Vector& x) const {
  const double r = x.norm();
  return x.allFinite() && r > 0.0 && r >= r_min_ && (r_max_ < 0 || r <= r_max_);
}

Matrix RadialStructuredChart::deviation(const Vector& x) const {
  const double r = x.norm();
  const RadialProfile pr = profile_(Jet2(r));
  Matrix d = pr.beta_m1.value() * Matrix::Identity(dim_, dim_) + pr.p.value() * x * x.transpose();
  if (j_) {
    const Vector y = *j_ * x;
    d += pr.q.value() * y * y.transpose();
  }
  return d;
}

Matrix RadialStructuredChart::metric(const Vector& x) const {
  return Matrix::Identity(dim_, dim_) + deviation(x);
}

MetricJet RadialStructuredChart::jet(const Vector& x) const {
  const int m = dim_;
  const double r = x.norm();
  const RadialProfile pr = profile_(Jet2::variable(r));
  const Matrix id = Matrix::Identity(m, m);
  const Vector y = j_ ? Vector(*j_ * x) : Vector::Zero(m);
  const Matrix jm = j_ ? *j_ : Matrix::Zero(m, m);

  // Cartesian gradient and Hessian of a radial function from its r-jet.
  auto grad = [&](const Jet2& f) -> Vector { return (f[1] / r) * x; };
  auto hess = [&](const Jet2& f) -> Matrix {
    return (f[2] / (r * r)) * x * x.transpose() +
           f[1] * (id / r - x * x.transpose() / (r * r * r));
  };
  const Vector gb = grad(pr.beta_m1), gp = grad(pr.p), gq = grad(pr.q);
  const Matrix hb = hess(pr.beta_m1), hp = hess(pr.p), hq = hess(pr.q);
  const double p = pr.p.value(), q = pr.q.value();

  MetricJet out;
  out.g = (1.0 + pr.beta_m1.value()) * id + p * x * x.transpose() + q * y * y.transpose();
  out.dg.resize(static_cast<std::size_t>(m));
  out.ddg.resize(static_cast<std::size_t>(m * m));

  // Outer products e_k x^T + x e_k^T and J_k y^T + y J_k^T (J_k = k-th column of J).
  auto sym_x = [&](int k) -> Matrix {
    Matrix s = Matrix::Zero(m, m);
    s.row(k) += x.transpose();
    s.col(k) += x;
    return s;
  };
  auto sym_y = [&](int k) -> Matrix {
    const Vector jk = jm.col(k);
    return jk * y.transpose() + y * jk.transpose();
  };

  for (int k = 0; k < m; ++k) {
    out.dg[static_cast<std::size_t>(k)] = gb(k) * id + gp(k) * x * x.transpose() + p * sym_x(k) +
                                          gq(k) * y * y.transpose() + q * sym_y(k);
  }
  for (int k = 0; k < m; ++k)
    for (int l = k; l < m; ++l) {
      Matrix e_kl = Matrix::Zero(m, m);
      e_kl(k, l) += 1.0;
      e_kl(l, k) += 1.0;
      const Vector jk = jm.col(k), jl = jm.col(l);
      Matrix d2 = hb(k, l) * id + hp(k, l) * x * x.transpose() + gp(k) * sym_x(l) +
                  gp(l) * sym_x(k) + p * e_kl + hq(k, l) * y * y.transpose() + gq(k) * sym_y(l) +
                  gq(l) * sym_y(k) + q * (jk * jl.transpose() + jl * jk.transpose());
      out.ddg[static_cast<std::size_t>(k * m + l)] = d2;
      out.ddg[static_cast<std::size_t>(l * m + k)] = d2;
    }
  return out;
}

FunctionChart::FunctionChart(int dim, MetricFn metric, DomainFn domain, JetFn jet)
    : dim_(dim), metric_(std::move(metric)), domain_(std::move(domain)), jet_(std::move(jet)) {}

MetricJet FunctionChart::jet(const Vector& x) const {
  if (jet_) return jet_(x);
  return finite_difference_jet(*this, x);
}

FiniteDifferenceChart::FiniteDifferenceChart(std::shared_ptr<const MetricChart> base)
    : base_(std::move(base)) {
  require(base_ != nullptr, ErrorCode::InvalidArgument, "null chart");
}

std::shared_ptr<const MetricChart> hyperbolic_normal_chart(int dim, double r_max) {
  require(dim >= 2, ErrorCode::InvalidDimension, "hyperbolic chart needs dimension >= 2");
  // g = beta delta + (1 - beta) x x^T / r^2 with beta = (sinh r / r)^2.
  auto profile = [](const Jet2& r) {
    Jet2 w;  // (sinh(r)/r - 1) / r^2
    Jet2 s;  // sinh(r)/r
    if (r.value() < 0.1) {
      const Jet2 r2 = r * r;
      w = Jet2(1.0 / 6) + r2 * (Jet2(1.0 / 120) +
                                r2 * (Jet2(1.0 / 5040) +
                                      r2 * (Jet2(1.0 / 362880) + r2 * Jet2(1.0 / 39916800))));
      s = Jet2(1.0) + r2 * w;
    } else {
      s = sinh(r) / r;
      w = (s - Jet2(1.0)) / (r * r);
    }
    RadialProfile pr;
    pr.beta_m1 = r * r * w * (s + Jet2(1.0));
    pr.p = -(w * (s + Jet2(1.0)));
    pr.q = Jet2(0.0);
    return pr;
  };
  return std::make_shared<RadialStructuredChart>(dim, profile, 0.0, r_max, std::nullopt);
}

std::shared_ptr<const MetricChart> stereographic_sphere_chart(int dim) {
  auto profile = [](const Jet2& r) {
    RadialProfile pr;
    const Jet2 c = Jet2(1.0) + r * r;
    pr.beta_m1 = Jet2(4.0) / (c * c) - Jet2(1.0);
    pr.p = Jet2(0.0);
    pr.q = Jet2(0.0);
    return pr;
  };
  return std::make_shared<RadialStructuredChart>(dim, profile, 0.0, -1.0, std::nullopt);
}

std::shared_ptr<const MetricChart> surface_of_revolution_chart(
    std::function<Jet2(const Jet2&)> warp, double r_min, double r_max) {
  auto metric = [warp](const Vector& x) {
    const double w = warp(Jet2(x(0))).value();
    Matrix g = Matrix::Identity(2, 2);
    g(1, 1) = w * w;
    return g;
  };
  auto jet = [warp](const Vector& x) {
    const Jet2 w = warp(Jet2::variable(x(0)));
    MetricJet j;
    j.g = Matrix::Identity(2, 2);
    j.g(1, 1) = w[0] * w[0];
    j.dg.assign(2, Matrix::Zero(2, 2));
    j.ddg.assign(4, Matrix::Zero(2, 2));
    j.dg[0](1, 1) = 2 * w[0] * w[1];
    j.ddg[0](1, 1) = 2 * (w[1] * w[1] + w[0] * w[2]);
    return j;
  };
  auto domain = [r_min, r_max](const Vector& x) {
    return x.size() == 2 && x.allFinite() && x(0) >= r_min && x(0) <= r_max;
  };
  return std::make_shared<FunctionChart>(2, metric, domain, jet);
}

}  // namespace alegeo
