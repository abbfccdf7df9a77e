#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace alegeo {

/// Univariate forward-mode jet: value and derivatives up to order N (N <= 4).
/// Stores actual derivatives, not Taylor coefficients.
template <std::size_t N>
class Jet {
  static_assert(N >= 1 && N <= 4, "Jet supports orders 1..4");

 public:
  Jet() { d_.fill(0.0); }
  Jet(double value) {  // NOLINT: constants promote implicitly
    d_.fill(0.0);
    d_[0] = value;
  }

  static Jet variable(double x) {
    Jet j(x);
    j.d_[1] = 1.0;
    return j;
  }

  double operator[](std::size_t k) const { return d_[k]; }
  double& operator[](std::size_t k) { return d_[k]; }
  double value() const { return d_[0]; }

  // Chain rule through an outer function with derivatives f[0..N] at value().
  Jet compose(const std::array<double, N + 1>& f) const {
    Jet r;
    r.d_[0] = f[0];
    const double x1 = d_[1];
    r.d_[1] = f[1] * x1;
    if constexpr (N >= 2) r.d_[2] = f[2] * x1 * x1 + f[1] * d_[2];
    if constexpr (N >= 3) r.d_[3] = f[3] * x1 * x1 * x1 + 3.0 * f[2] * x1 * d_[2] + f[1] * d_[3];
    if constexpr (N >= 4)
      r.d_[4] = f[4] * x1 * x1 * x1 * x1 + 6.0 * f[3] * x1 * x1 * d_[2] +
                f[2] * (4.0 * x1 * d_[3] + 3.0 * d_[2] * d_[2]) + f[1] * d_[4];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) d_[k] += o.d_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= N; ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (std::size_t k = 0; k <= N; ++k) a.d_[k] = -a.d_[k];
    return a;
  }

  // Leibniz rule.
  friend Jet operator*(const Jet& a, const Jet& b) {
    static constexpr std::array<std::array<double, 5>, 5> binom{{{1, 0, 0, 0, 0},
                                                                 {1, 1, 0, 0, 0},
                                                                 {1, 2, 1, 0, 0},
                                                                 {1, 3, 3, 1, 0},
                                                                 {1, 4, 6, 4, 1}}};
    Jet r;
    for (std::size_t n = 0; n <= N; ++n) {
      double s = 0.0;
      for (std::size_t k = 0; k <= n; ++k) s += binom[n][k] * a.d_[k] * b.d_[n - k];
      r.d_[n] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet reciprocal(const Jet& x) {
    const double v = x.value();
    std::array<double, N + 1> f{};
    double p = 1.0 / v;
    double fact = 1.0;
    for (std::size_t k = 0; k <= N; ++k) {
      f[k] = ((k % 2) ? -1.0 : 1.0) * fact * p;
      p /= v;
      fact *= static_cast<double>(k + 1);
    }
    return x.compose(f);
  }

 private:
  std::array<double, N + 1> d_;
};

template <std::size_t N>
Jet<N> pow(const Jet<N>& x, int n) {
  const double v = x.value();
  std::array<double, N + 1> f{};
  double coef = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    f[k] = coef * std::pow(v, n - static_cast<int>(k));
    coef *= static_cast<double>(n - static_cast<int>(k));
  }
  return x.compose(f);
}

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& x) {
  const double v = x.value();
  const double s = std::sqrt(v);
  std::array<double, 5> all{s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v), -0.9375 / (s * v * v * v)};
  std::array<double, N + 1> f{};
  for (std::size_t k = 0; k <= N; ++k) f[k] = all[k];
  return x.compose(f);
}

template <std::size_t N>
Jet<N> exp(const Jet<N>& x) {
  std::array<double, N + 1> f{};
  f.fill(std::exp(x.value()));
  return x.compose(f);
}

template <std::size_t N>
Jet<N> sinh(const Jet<N>& x) {
  const double s = std::sinh(x.value()), c = std::cosh(x.value());
  std::array<double, N + 1> f{};
  for (std::size_t k = 0; k <= N; ++k) f[k] = (k % 2) ? c : s;
  return x.compose(f);
}

template <std::size_t N>
Jet<N> sin(const Jet<N>& x) {
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const std::array<double, 4> cycle{s, c, -s, -c};
  std::array<double, N + 1> f{};
  for (std::size_t k = 0; k <= N; ++k) f[k] = cycle[k % 4];
  return x.compose(f);
}

template <std::size_t N>
Jet<N> cos(const Jet<N>& x) {
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const std::array<double, 4> cycle{c, -s, -c, s};
  std::array<double, N + 1> f{};
  for (std::size_t k = 0; k <= N; ++k) f[k] = cycle[k % 4];
  return x.compose(f);
}

using Jet2 = Jet<2>;

}  // namespace alegeo
