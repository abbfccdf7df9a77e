#include "alegeo/core/tensor.hpp"

#include "alegeo/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alegeo {

Tensor4& Tensor4::operator+=(const Tensor4& o) {
  require(o.dim_ == dim_, ErrorCode::DimensionMismatch, "tensor sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& o) {
  require(o.dim_ == dim_, ErrorCode::DimensionMismatch, "tensor difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor4& Tensor4::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

double Tensor4::norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Tensor4 Tensor4::from_flat(int dim, const std::vector<double>& flat) {
  Tensor4 t(dim);
  require(flat.size() == t.size(), ErrorCode::DimensionMismatch,
          "expected " + std::to_string(t.size()) + " tensor components, got " +
              std::to_string(flat.size()));
  t.data_ = flat;
  return t;
}

double contract(const Tensor4& a, const Tensor4& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "contract");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

double contract_swapped(const Tensor4& a, const Tensor4& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "contract_swapped");
  const int m = a.dim();
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) s += a(i, k, j, l) * b(i, l, j, k);
  return s;
}

Tensor4 kulkarni_nomizu(const Matrix& h, const Matrix& k) {
  const int m = static_cast<int>(h.rows());
  Tensor4 t(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          t(a, b, c, d) = h(a, c) * k(b, d) + h(b, d) * k(a, c) - h(a, d) * k(b, c) -
                          h(b, c) * k(a, d);
  return t;
}

Tensor4 constant_curvature_tensor(const Matrix& g, double sectional) {
  const int m = static_cast<int>(g.rows());
  Tensor4 t(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          t(a, b, c, d) = sectional * (g(a, c) * g(b, d) - g(a, d) * g(b, c));
  return t;
}

Matrix ricci_contraction(const Tensor4& r, const Matrix& g_inv) {
  const int m = r.dim();
  Matrix ric = Matrix::Zero(m, m);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l) {
      double s = 0.0;
      for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) s += g_inv(i, k) * r(i, j, k, l);
      ric(j, l) = s;
    }
  return ric;
}

Tensor4 rotate(const Tensor4& t, const Matrix& a) {
  const int m = t.dim();
  // Four successive single-slot transforms keep this O(m^5).
  Tensor4 cur = t;
  for (int slot = 0; slot < 4; ++slot) {
    Tensor4 next(m);
    for (int i0 = 0; i0 < m; ++i0)
      for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = 0; i2 < m; ++i2)
          for (int i3 = 0; i3 < m; ++i3) {
            int idx[4] = {i0, i1, i2, i3};
            const int out = idx[slot];
            double s = 0.0;
            for (int k = 0; k < m; ++k) {
              idx[slot] = k;
              s += a(out, k) * cur(idx[0], idx[1], idx[2], idx[3]);
            }
            next(i0, i1, i2, i3) = s;
          }
    cur = std::move(next);
  }
  return cur;
}

double SymmetryResiduals::max() const {
  return std::max({antisymmetry, pair_symmetry, first_bianchi});
}

SymmetryResiduals curvature_symmetry_residuals(const Tensor4& r) {
  const int m = r.dim();
  SymmetryResiduals res;
  const double scale = r.max_abs();
  if (scale == 0.0) return res;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double v = r(i, j, k, l);
          res.antisymmetry = std::max(
              {res.antisymmetry, std::abs(v + r(j, i, k, l)), std::abs(v + r(i, j, l, k))});
          res.pair_symmetry = std::max(res.pair_symmetry, std::abs(v - r(k, l, i, j)));
          res.first_bianchi =
              std::max(res.first_bianchi, std::abs(v + r(i, k, l, j) + r(i, l, j, k)));
        }
  res.antisymmetry /= scale;
  res.pair_symmetry /= scale;
  res.first_bianchi /= scale;
  return res;
}

double trace_residual(const Tensor4& w, const Matrix& g_inv) {
  const int m = w.dim();
  const double scale = w.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  // All six slot pairs.
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
          double s = 0.0;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              int idx[4];
              int free_slot = 0;
              for (int slot = 0; slot < 4; ++slot) {
                if (slot == p)
                  idx[slot] = a;
                else if (slot == q)
                  idx[slot] = b;
                else
                  idx[slot] = (free_slot++ == 0) ? u : v;
              }
              s += g_inv(a, b) * w(idx[0], idx[1], idx[2], idx[3]);
            }
          worst = std::max(worst, std::abs(s));
        }
  return worst / scale;
}

Tensor4 project_curvature(const Tensor4& t) {
  const int m = t.dim();
  Tensor4 a(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double anti = 0.25 * (t(i, j, k, l) - t(j, i, k, l) - t(i, j, l, k) + t(j, i, l, k));
          const double anti_swap =
              0.25 * (t(k, l, i, j) - t(l, k, i, j) - t(k, l, j, i) + t(l, k, j, i));
          a(i, j, k, l) = 0.5 * (anti + anti_swap);
        }
  // Remove the totally antisymmetric part, which is what violates first Bianchi.
  Tensor4 r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          r(i, j, k, l) = a(i, j, k, l) - (a(i, j, k, l) + a(i, k, l, j) + a(i, l, j, k)) / 3.0;
  return r;
}

Tensor4 weyl_part(const Tensor4& r) {
  const int m = r.dim();
  if (m < 4) return Tensor4(m);
  const Matrix id = Matrix::Identity(m, m);
  const Matrix ric = ricci_contraction(r, id);
  const double scal = ric.trace();
  Tensor4 w = r;
  w -= (1.0 / (m - 2)) * kulkarni_nomizu(ric, id);
  w += (scal / (2.0 * (m - 1) * (m - 2))) * kulkarni_nomizu(id, id);
  return w;
}

Tensor4 random_weyl(int dim, std::mt19937_64& rng) {
  require(dim >= 4, ErrorCode::InvalidDimension, "Weyl tensors vanish below dimension 4");
  std::normal_distribution<double> normal(0.0, 1.0);
  Tensor4 t(dim);
  for (double& v : t.data()) v = normal(rng);
  Tensor4 w = project_weyl(t);
  w *= 1.0 / w.norm();
  return w;
}

Matrix random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

double spd_condition_number(const Matrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) return std::numeric_limits<double>::infinity();
  return ev.maxCoeff() / ev.minCoeff();
}

}  // namespace alegeo
