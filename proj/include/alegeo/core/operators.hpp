#pragma once

#include "alegeo/core/chart.hpp"
#include "alegeo/core/curvature.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace alegeo {

/// Symmetric 2-tensor with coordinate derivatives; dh[k] = d_k h and
/// ddh[k * m + l] = d_k d_l h (empty when not requested).
struct SymJet {
  Matrix h;
  std::vector<Matrix> dh;
  std::vector<Matrix> ddh;
};

/// Symmetric (0,2)-tensor field in chart coordinates.
class Sym2Field {
 public:
  virtual ~Sym2Field() = default;
  virtual int dim() const = 0;
  virtual Matrix value(const Vector& x) const = 0;
  /// Derivatives up to the given order (0, 1 or 2). Defaults to finite differences.
  virtual SymJet jet(const Vector& x, int order) const;
  virtual bool analytic() const { return false; }
};

SymJet finite_difference_jet(const Sym2Field& field, const Vector& x, int order);

class FunctionSym2Field final : public Sym2Field {
 public:
  using ValueFn = std::function<Matrix(const Vector&)>;
  using JetFn = std::function<SymJet(const Vector&, int)>;
  FunctionSym2Field(int dim, ValueFn value, JetFn jet = {});
  int dim() const override { return dim_; }
  Matrix value(const Vector& x) const override { return value_(x); }
  SymJet jet(const Vector& x, int order) const override;
  bool analytic() const override { return static_cast<bool>(jet_); }

 private:
  int dim_;
  ValueFn value_;
  JetFn jet_;
};

/// The chart metric itself as a field.
class MetricField final : public Sym2Field {
 public:
  explicit MetricField(std::shared_ptr<const MetricChart> chart) : chart_(std::move(chart)) {}
  int dim() const override { return chart_->dim(); }
  Matrix value(const Vector& x) const override { return chart_->metric(x); }
  SymJet jet(const Vector& x, int order) const override;
  bool analytic() const override { return chart_->mode() == DerivativeMode::Analytic; }

 private:
  std::shared_ptr<const MetricChart> chart_;
};

/// Forces finite-difference derivatives of another field.
class FiniteDifferenceField final : public Sym2Field {
 public:
  explicit FiniteDifferenceField(const Sym2Field& base) : base_(base) {}
  int dim() const override { return base_.dim(); }
  Matrix value(const Vector& x) const override { return base_.value(x); }

 private:
  const Sym2Field& base_;
};

/// Covector field omega_i(x) with Jacobian J(i, j) = d_i omega_j.
class CovectorField {
 public:
  using ValueFn = std::function<Vector(const Vector&)>;
  using JacobianFn = std::function<Matrix(const Vector&)>;
  CovectorField(int dim, ValueFn value, JacobianFn jacobian = {});
  int dim() const { return dim_; }
  Vector value(const Vector& x) const { return value_(x); }
  Matrix jacobian(const Vector& x) const;

 private:
  int dim_;
  ValueFn value_;
  JacobianFn jacobian_;
};

/// nabla_k h_ij stored as (k, i, j).
Tensor3 covariant_derivative(const Connection& c, const SymJet& h);

/// (delta h)_i = -g^{jk} nabla_k h_ij.
Vector divergence(const Connection& c, const SymJet& h);
Vector divergence(const MetricChart& chart, const Sym2Field& h, const Vector& x);

/// tr_g h = g^{ij} h_ij.
double trace(const MetricChart& chart, const Sym2Field& h, const Vector& x);
/// Coordinate gradient of tr_g h.
Vector trace_gradient(const Connection& c, const MetricJet& g, const SymJet& h);

/// B h = delta h + 1/2 d tr h, assembled directly from the coordinate formula.
Vector bianchi_op(const MetricChart& chart, const Sym2Field& h, const Vector& x);

/// (delta* omega)_ij = 1/2 (nabla_i omega_j + nabla_j omega_i).
Matrix delta_star(const MetricChart& chart, const CovectorField& omega, const Vector& x);

/// Rough Laplacian (nabla* nabla h)_ij = -g^{ab} nabla^2_ab h_ij.
Matrix rough_laplacian(const Connection& c, const SymJet& h);
Matrix rough_laplacian(const MetricChart& chart, const Sym2Field& h, const Vector& x);

/// (R h)_ij = R_ikjl h^{kl}.
Matrix curvature_action(const Tensor4& r, const Matrix& g_inv, const Matrix& h);

/// P h = 1/2 nabla* nabla h - R h.
Matrix apply_P(const MetricChart& chart, const Sym2Field& h, const Vector& x);

/// Covariant Hessian d_i d_j u - Gamma^k_ij d_k u.
Matrix covariant_hessian(const Tensor3& gamma, const Vector& du, const Matrix& ddu);

/// |h|_g = sqrt(g^{ia} g^{jb} h_ij h_ab).
double tensor_norm(const Matrix& h, const Matrix& g_inv);

}  // namespace alegeo
