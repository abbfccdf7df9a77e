#pragma once

#include "alegeo/core/chart.hpp"
#include "alegeo/core/tensor.hpp"

#include <vector>

namespace alegeo {

/// Levi-Civita connection data at a point.
/// gamma(k, i, j) = Gamma^k_ij and dgamma[a](k, i, j) = d_a Gamma^k_ij.
struct Connection {
  Matrix g;
  Matrix g_inv;
  Tensor3 gamma;
  std::vector<Tensor3> dgamma;

  int dim() const { return static_cast<int>(g.rows()); }
};

Connection connection(const MetricJet& jet);
Connection connection(const MetricChart& chart, const Vector& x);

Tensor3 christoffel(const MetricChart& chart, const Vector& x);

/// Fully lowered curvature R_ijkl, sign fixed so that the round sphere has R_ijij > 0.
Tensor4 riemann(const Connection& conn);
Tensor4 riemann(const MetricChart& chart, const Vector& x);

/// Ric_jl = g^{ik} R_ijkl.
Matrix ricci(const Tensor4& r, const Matrix& g);
/// scal = g^{jl} Ric_jl.
double scalar_curvature(const Matrix& ric, const Matrix& g);

/// Algebraic Weyl tensor (curvature symmetries, totally trace-free).
class WeylTensor {
 public:
  WeylTensor() = default;

  static WeylTensor zero(int dim) { return WeylTensor(Tensor4(dim)); }
  /// Validates symmetries and tracelessness against the Euclidean metric; throws NotWeyl.
  static WeylTensor from_components(const Tensor4& t, double tol = 1e-8);
  /// Validates against a given metric; throws NotWeyl.
  static WeylTensor from_components(const Tensor4& t, const Matrix& g, double tol);
  /// Orthogonal projection of an arbitrary rank-4 array onto Weyl tensors.
  static WeylTensor project(const Tensor4& t) { return WeylTensor(project_weyl(t)); }

  int dim() const { return t_.dim(); }
  const Tensor4& tensor() const { return t_; }
  double norm() const { return t_.norm(); }

  WeylTensor rotated(const Matrix& a) const { return WeylTensor(rotate(t_, a)); }
  WeylTensor scaled(double s) const { return WeylTensor(s * t_); }
  friend WeylTensor operator+(const WeylTensor& a, const WeylTensor& b) {
    return WeylTensor(a.t_ + b.t_);
  }

 private:
  explicit WeylTensor(Tensor4 t) : t_(std::move(t)) {}
  Tensor4 t_;
};

/// Tolerance on |Ric - mu g| for the Einstein decomposition.
inline constexpr double kEinsteinTolerance = 1e-6;

/// W = R - mu/(m-1) (g_ik g_jl - g_il g_jk) for an Einstein curvature tensor.
/// Throws NotEinstein when Ric differs from mu g by more than the tolerance.
WeylTensor weyl_decompose(const Tensor4& r, const Matrix& g, double mu);

/// Inverse of weyl_decompose.
Tensor4 einstein_curvature(const WeylTensor& w, const Matrix& g, double mu);

}  // namespace alegeo
