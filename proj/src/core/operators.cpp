#include "alegeo/core/operators.hpp"

#include "alegeo/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace alegeo {

SymJet Sym2Field::jet(const Vector& x, int order) const {
  return finite_difference_jet(*this, x, order);
}

SymJet finite_difference_jet(const Sym2Field& field, const Vector& x, int order) {
  const int m = field.dim();
  const double h = fd_step(x);
  auto f = [&](const Vector& y) { return field.value(y); };
  SymJet j;
  j.h = field.value(x);
  if (order >= 1) {
    j.dh.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) j.dh[static_cast<std::size_t>(k)] = central_difference(f, x, k, h);
  }
  if (order >= 2) {
    j.ddh.resize(static_cast<std::size_t>(m * m));
    for (int k = 0; k < m; ++k)
      for (int l = k; l < m; ++l) {
        auto dl = [&](const Vector& y) -> Matrix { return central_difference(f, y, l, h); };
        const Matrix d2 = central_difference(dl, x, k, h);
        j.ddh[static_cast<std::size_t>(k * m + l)] = d2;
        j.ddh[static_cast<std::size_t>(l * m + k)] = d2;
      }
  }
  return j;
}

FunctionSym2Field::FunctionSym2Field(int dim, ValueFn value, JetFn jet)
    : dim_(dim), value_(std::move(value)), jet_(std::move(jet)) {}

SymJet FunctionSym2Field::jet(const Vector& x, int order) const {
  if (jet_) return jet_(x, order);
  return finite_difference_jet(*this, x, order);
}

SymJet MetricField::jet(const Vector& x, int order) const {
  const MetricJet g = chart_->jet(x);
  SymJet j;
  j.h = g.g;
  if (order >= 1) j.dh = g.dg;
  if (order >= 2) j.ddh = g.ddg;
  return j;
}

CovectorField::CovectorField(int dim, ValueFn value, JacobianFn jacobian)
    : dim_(dim), value_(std::move(value)), jacobian_(std::move(jacobian)) {}

Matrix CovectorField::jacobian(const Vector& x) const {
  if (jacobian_) return jacobian_(x);
  const double h = fd_step(x);
  Matrix jac(dim_, dim_);
  for (int k = 0; k < dim_; ++k) jac.row(k) = central_difference(value_, x, k, h).transpose();
  return jac;
}

Tensor3 covariant_derivative(const Connection& c, const SymJet& h) {
  const int m = c.dim();
  Tensor3 out(m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double s = h.dh[static_cast<std::size_t>(k)](i, j);
        for (int p = 0; p < m; ++p) s -= c.gamma(p, k, i) * h.h(p, j) + c.gamma(p, k, j) * h.h(i, p);
        out(k, i, j) = out(k, j, i) = s;
      }
  return out;
}

Vector divergence(const Connection& c, const SymJet& h) {
  const int m = c.dim();
  const Tensor3 nh = covariant_derivative(c, h);
  Vector out = Vector::Zero(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out(i) -= c.g_inv(j, k) * nh(k, i, j);
  return out;
}

static void check_field(const MetricChart& chart, const Sym2Field& h) {
  require(chart.dim() == h.dim(), ErrorCode::DimensionMismatch,
          "field and chart dimensions differ");
}

Vector divergence(const MetricChart& chart, const Sym2Field& h, const Vector& x) {
  check_field(chart, h);
  const Connection c = connection(chart, x);
  return divergence(c, h.jet(x, 1));
}

double trace(const MetricChart& chart, const Sym2Field& h, const Vector& x) {
  check_field(chart, h);
  const Matrix g_inv = chart.checked_metric(x).inverse();
  return g_inv.cwiseProduct(h.value(x)).sum();
}

Vector trace_gradient(const Connection& c, const MetricJet& g, const SymJet& h) {
  const int m = c.dim();
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    // d_i g^{jk} = -g^{ja} d_i g_ab g^{bk}
    const Matrix dginv = -c.g_inv * g.dg[static_cast<std::size_t>(i)] * c.g_inv;
    out(i) = c.g_inv.cwiseProduct(h.dh[static_cast<std::size_t>(i)]).sum() +
             dginv.cwiseProduct(h.h).sum();
  }
  return out;
}

Vector bianchi_op(const MetricChart& chart, const Sym2Field& h, const Vector& x) {
  check_field(chart, h);
  const int m = chart.dim();
  const MetricJet g = chart.checked_jet(x);
  const Connection c = connection(g);
  const SymJet hj = h.jet(x, 1);
  const Vector dtr = trace_gradient(c, g, hj);
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    double s = 0.5 * dtr(i);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        double nabla = hj.dh[static_cast<std::size_t>(k)](i, j);
        for (int p = 0; p < m; ++p) nabla -= c.gamma(p, k, i) * hj.h(p, j) + c.gamma(p, k, j) * hj.h(i, p);
        s -= c.g_inv(j, k) * nabla;
      }
    out(i) = s;
  }
  return out;
}

Matrix delta_star(const MetricChart& chart, const CovectorField& omega, const Vector& x) {
  require(chart.dim() == omega.dim(), ErrorCode::DimensionMismatch,
          "covector and chart dimensions differ");
  const int m = chart.dim();
  const Connection c = connection(chart, x);
  const Vector w = omega.value(x);
  const Matrix jac = omega.jacobian(x);
  Matrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0.5 * (jac(i, j) + jac(j, i));
      for (int k = 0; k < m; ++k) s -= c.gamma(k, i, j) * w(k);
      out(i, j) = s;
    }
  return out;
}

Matrix rough_laplacian(const Connection& c, const SymJet& h) {
  const int m = c.dim();
  require(h.ddh.size() == static_cast<std::size_t>(m * m), ErrorCode::InvalidArgument,
          "rough_laplacian needs second derivatives");
  const Tensor3 nh = covariant_derivative(c, h);
  Matrix out = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double acc = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const double gab = c.g_inv(a, b);
          if (gab == 0.0) continue;
          const Tensor3& dga = c.dgamma[static_cast<std::size_t>(a)];
          // d_a (nabla_b h_ij)
          double v = h.ddh[static_cast<std::size_t>(a * m + b)](i, j);
          for (int p = 0; p < m; ++p) {
            v -= dga(p, b, i) * h.h(p, j) + c.gamma(p, b, i) * h.dh[static_cast<std::size_t>(a)](p, j);
            v -= dga(p, b, j) * h.h(i, p) + c.gamma(p, b, j) * h.dh[static_cast<std::size_t>(a)](i, p);
          }
          for (int p = 0; p < m; ++p)
            v -= c.gamma(p, a, b) * nh(p, i, j) + c.gamma(p, a, i) * nh(b, p, j) +
                 c.gamma(p, a, j) * nh(b, i, p);
          acc += gab * v;
        }
      out(i, j) = out(j, i) = -acc;
    }
  return out;
}

Matrix rough_laplacian(const MetricChart& chart, const Sym2Field& h, const Vector& x) {
  check_field(chart, h);
  return rough_laplacian(connection(chart, x), h.jet(x, 2));
}

Matrix curvature_action(const Tensor4& r, const Matrix& g_inv, const Matrix& h) {
  const int m = r.dim();
  const Matrix h_up = g_inv * h * g_inv;
  Matrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) s += r(i, k, j, l) * h_up(k, l);
      out(i, j) = s;
    }
  return out;
}

Matrix apply_P(const MetricChart& chart, const Sym2Field& h, const Vector& x) {
  check_field(chart, h);
  const Connection c = connection(chart, x);
  const SymJet hj = h.jet(x, 2);
  const Tensor4 r = riemann(c);
  return 0.5 * rough_laplacian(c, hj) - curvature_action(r, c.g_inv, hj.h);
}

Matrix covariant_hessian(const Tensor3& gamma, const Vector& du, const Matrix& ddu) {
  const int m = gamma.dim();
  Matrix out = ddu;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out(i, j) -= gamma(k, i, j) * du(k);
  return out;
}

double tensor_norm(const Matrix& h, const Matrix& g_inv) {
  const Matrix a = g_inv * h;
  return std::sqrt(std::max(0.0, (a * a).trace()));
}

}  // namespace alegeo
