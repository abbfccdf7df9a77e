#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <random>
#include <vector>

namespace alegeo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense rank-3 array T(a, b, c), row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * dim_ + b) * dim_ + c);
  }
  int dim_ = 0;
  std::vector<double> data_;
};

/// Dense rank-4 array T(a, b, c, d), row-major. Used for curvature tensors
/// with all indices lowered and for sphere moment arrays.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int dim)
      : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim * dim), 0.0) {}

  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }

  Tensor4& operator+=(const Tensor4& o);
  Tensor4& operator-=(const Tensor4& o);
  Tensor4& operator*=(double s);
  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }

  double norm() const;     // Frobenius
  double max_abs() const;

  static Tensor4 from_flat(int dim, const std::vector<double>& flat);

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>(((a * dim_ + b) * dim_ + c) * dim_ + d);
  }
  int dim_ = 0;
  std::vector<double> data_;
};

/// Full contraction sum_abcd A_abcd B_abcd.
double contract(const Tensor4& a, const Tensor4& b);

/// sum_ikjl A_ikjl B_iljk: the contraction with the last two slots of B swapped.
double contract_swapped(const Tensor4& a, const Tensor4& b);

/// Kulkarni-Nomizu product (h o k)_abcd = h_ac k_bd + h_bd k_ac - h_ad k_bc - h_bc k_ad.
Tensor4 kulkarni_nomizu(const Matrix& h, const Matrix& k);

/// Constant-curvature tensor K (g_ik g_jl - g_il g_jk).
Tensor4 constant_curvature_tensor(const Matrix& g, double sectional);

/// Contraction g^{ik} R_ijkl.
Matrix ricci_contraction(const Tensor4& r, const Matrix& g_inv);

/// Pulls every slot through an orthogonal change of frame: T'_abcd = A_ai A_bj A_ck A_dl T_ijkl.
Tensor4 rotate(const Tensor4& t, const Matrix& a);

/// Residuals of the algebraic curvature symmetries, relative to max|R| (0 for
/// the zero tensor).
struct SymmetryResiduals {
  double antisymmetry = 0.0;  // R_ijkl + R_jikl and R_ijkl + R_ijlk
  double pair_symmetry = 0.0; // R_ijkl - R_klij
  double first_bianchi = 0.0; // R_ijkl + R_iklj + R_iljk
  double max() const;
};
SymmetryResiduals curvature_symmetry_residuals(const Tensor4& r);

/// max over every trace position of |g^{..} W| relative to max|W|.
double trace_residual(const Tensor4& w, const Matrix& g_inv);

/// Orthogonal (Frobenius) projection onto algebraic curvature tensors.
Tensor4 project_curvature(const Tensor4& t);

/// Weyl part of an algebraic curvature tensor w.r.t. the Euclidean frame.
Tensor4 weyl_part(const Tensor4& r);

/// Orthogonal projection onto Weyl tensors (curvature symmetries, totally trace-free).
inline Tensor4 project_weyl(const Tensor4& t) { return weyl_part(project_curvature(t)); }

/// Random Weyl tensor with unit Frobenius norm (dimension >= 4).
Tensor4 random_weyl(int dim, std::mt19937_64& rng);

/// Haar-distributed random orthogonal matrix.
Matrix random_orthogonal(int dim, std::mt19937_64& rng);

/// Largest-to-smallest eigenvalue ratio of a symmetric positive definite matrix,
/// or +inf when the smallest eigenvalue is not positive.
double spd_condition_number(const Matrix& g);

}  // namespace alegeo
