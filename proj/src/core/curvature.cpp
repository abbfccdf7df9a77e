#include "alegeo/core/curvature.hpp"

#include "alegeo/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace alegeo {

Connection connection(const MetricJet& jet) {
  const int m = jet.dim();
  Connection c;
  c.g = jet.g;
  c.g_inv = jet.g.inverse();
  c.gamma = Tensor3(m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double s = 0.0;
        for (int l = 0; l < m; ++l)
          s += c.g_inv(k, l) *
               (jet.dg[i](j, l) + jet.dg[j](i, l) - jet.dg[l](i, j));
        c.gamma(k, i, j) = c.gamma(k, j, i) = 0.5 * s;
      }
  // d_a Gamma^c_bi = -g^{ce} d_a g_ef Gamma^f_bi
  //                 + 1/2 g^{cd} (d_a d_b g_id + d_a d_i g_bd - d_a d_d g_bi)
  c.dgamma.assign(static_cast<std::size_t>(m), Tensor3(m));
  for (int a = 0; a < m; ++a) {
    const Matrix& dga = jet.dg[a];
    Tensor3& out = c.dgamma[static_cast<std::size_t>(a)];
    for (int b = 0; b < m; ++b)
      for (int i = b; i < m; ++i) {
        const Matrix& dab = jet.second(a, b);
        const Matrix& dai = jet.second(a, i);
        Vector lower(m);  // lowered second-derivative combination, index d
        for (int d = 0; d < m; ++d) lower(d) = 0.5 * (dab(i, d) + dai(b, d) - jet.second(a, d)(b, i));
        Vector dg_gamma(m);  // d_a g_ef Gamma^f_bi, index e
        for (int e = 0; e < m; ++e) {
          double s = 0.0;
          for (int f = 0; f < m; ++f) s += dga(e, f) * c.gamma(f, b, i);
          dg_gamma(e) = s;
        }
        const Vector v = c.g_inv * (lower - dg_gamma);
        for (int cc = 0; cc < m; ++cc) out(cc, b, i) = out(cc, i, b) = v(cc);
      }
  }
  return c;
}

Connection connection(const MetricChart& chart, const Vector& x) {
  return connection(chart.checked_jet(x));
}

Tensor3 christoffel(const MetricChart& chart, const Vector& x) {
  return connection(chart, x).gamma;
}

Tensor4 riemann(const Connection& c) {
  const int m = c.dim();
  // R^a_bcd = d_c G^a_db - d_d G^a_cb + G^a_ce G^e_db - G^a_de G^e_cb
  Tensor4 up(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc)
        for (int d = cc + 1; d < m; ++d) {
          double s = c.dgamma[cc](a, d, b) - c.dgamma[d](a, cc, b);
          for (int e = 0; e < m; ++e)
            s += c.gamma(a, cc, e) * c.gamma(e, d, b) - c.gamma(a, d, e) * c.gamma(e, cc, b);
          up(a, b, cc, d) = s;
          up(a, b, d, cc) = -s;
        }
  Tensor4 r(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc)
        for (int d = 0; d < m; ++d) {
          double s = 0.0;
          for (int e = 0; e < m; ++e) s += c.g(a, e) * up(e, b, cc, d);
          r(a, b, cc, d) = s;
        }
  return r;
}

Tensor4 riemann(const MetricChart& chart, const Vector& x) { return riemann(connection(chart, x)); }

Matrix ricci(const Tensor4& r, const Matrix& g) {
  require(g.rows() == r.dim() && g.cols() == r.dim(), ErrorCode::DimensionMismatch,
          "ricci: metric and curvature dimensions differ");
  return ricci_contraction(r, g.inverse());
}

double scalar_curvature(const Matrix& ric, const Matrix& g) {
  require(g.rows() == ric.rows() && g.cols() == ric.cols(), ErrorCode::DimensionMismatch,
          "scalar_curvature: dimensions differ");
  return (g.inverse().cwiseProduct(ric)).sum();
}

WeylTensor WeylTensor::from_components(const Tensor4& t, double tol) {
  return from_components(t, Matrix::Identity(t.dim(), t.dim()), tol);
}

WeylTensor WeylTensor::from_components(const Tensor4& t, const Matrix& g, double tol) {
  require(g.rows() == t.dim(), ErrorCode::DimensionMismatch, "Weyl tensor: metric dimension");
  const SymmetryResiduals sym = curvature_symmetry_residuals(t);
  const double tr = trace_residual(t, g.inverse());
  require(sym.max() <= tol && tr <= tol, ErrorCode::NotWeyl,
          "symmetry residual " + std::to_string(sym.max()) + ", trace residual " +
              std::to_string(tr));
  return WeylTensor(t);
}

WeylTensor weyl_decompose(const Tensor4& r, const Matrix& g, double mu) {
  const int m = r.dim();
  require(g.rows() == m && g.cols() == m, ErrorCode::DimensionMismatch,
          "weyl_decompose: metric and curvature dimensions differ");
  require(m >= 3, ErrorCode::InvalidDimension, "weyl_decompose needs dimension >= 3");
  const Matrix ric = ricci(r, g);
  const double defect = (ric - mu * g).cwiseAbs().maxCoeff();
  require(defect <= kEinsteinTolerance * std::max(1.0, std::abs(mu)), ErrorCode::NotEinstein,
          "|Ric - mu g| = " + std::to_string(defect));
  Tensor4 w = r - constant_curvature_tensor(g, mu / (m - 1));
  // Rounding noise left over from a conformally flat input is not a Weyl tensor.
  if (w.max_abs() <= 1e-13 * std::max(1.0, r.max_abs())) return WeylTensor::zero(m);
  return WeylTensor::from_components(w, g, kEinsteinTolerance);
}

Tensor4 einstein_curvature(const WeylTensor& w, const Matrix& g, double mu) {
  const int m = w.dim();
  require(g.rows() == m, ErrorCode::DimensionMismatch, "einstein_curvature: dimension");
  return w.tensor() + constant_curvature_tensor(g, mu / (m - 1));
}

}  // namespace alegeo
