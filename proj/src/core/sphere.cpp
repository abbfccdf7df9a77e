#include "alegeo/core/sphere.hpp"

#include "alegeo/core/error.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <numbers>

namespace alegeo {

double sphere_area(int m) {
  require(m >= 1, ErrorCode::InvalidDimension, "sphere_area needs m >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

namespace {

struct Rule1D {
  std::vector<double> nodes;    // cos(phi)
  std::vector<double> weights;  // including the sin^p(phi) weight
};

Rule1D gauss_legendre(int n) {
  Rule1D r;
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
  for (double z : zeros) {
    const double dp = boost::math::legendre_p_prime(n, z);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.nodes.push_back(z);
    r.weights.push_back(w);
    if (z != 0.0) {
      r.nodes.push_back(-z);
      r.weights.push_back(w);
    }
  }
  return r;
}

// int_0^pi F(cos phi) sin^p(phi) dphi = int_{-1}^{1} F(t) (1 - t^2)^{(p-1)/2} dt.
Rule1D polar_rule(int n, int p) {
  Rule1D r;
  if (p % 2 == 1) {
    r = gauss_legendre(n);
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      r.weights[i] *= std::pow(1.0 - r.nodes[i] * r.nodes[i], (p - 1) / 2);
  } else {
    // Chebyshev second kind: int f(t) sqrt(1 - t^2) dt.
    for (int i = 1; i <= n; ++i) {
      const double th = i * std::numbers::pi / (n + 1);
      const double t = std::cos(th);
      const double s = std::sin(th);
      r.nodes.push_back(t);
      r.weights.push_back(std::numbers::pi / (n + 1) * s * s *
                          std::pow(1.0 - t * t, (p - 2) / 2));
    }
  }
  return r;
}

}  // namespace

SphereGrid make_sphere_grid(int m, int n_polar, int n_azimuth) {
  require(m >= 2, ErrorCode::InvalidDimension, "sphere grid needs m >= 2");
  require(n_polar >= 1 && n_azimuth >= 1, ErrorCode::InvalidArgument, "sphere grid resolution");
  // Angles phi_1..phi_{m-2} with weights sin^{m-1-k}, then the azimuth.
  std::vector<Rule1D> rules;
  for (int k = 1; k <= m - 2; ++k) rules.push_back(polar_rule(n_polar, m - 1 - k));
  SphereGrid g;
  g.dim = m;
  std::vector<std::size_t> idx(rules.size(), 0);
  while (true) {
    double w = 1.0;
    Vector x(m);
    double sprod = 1.0;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const double c = rules[k].nodes[idx[k]];
      x(static_cast<int>(k)) = sprod * c;
      sprod *= std::sqrt(std::max(0.0, 1.0 - c * c));
      w *= rules[k].weights[idx[k]];
    }
    for (int j = 0; j < n_azimuth; ++j) {
      const double th = 2.0 * std::numbers::pi * (j + 0.5) / n_azimuth;
      Vector y = x;
      y(m - 2) = sprod * std::cos(th);
      y(m - 1) = sprod * std::sin(th);
      g.points.push_back(y);
      g.weights.push_back(w * 2.0 * std::numbers::pi / n_azimuth);
    }
    std::size_t k = 0;
    while (k < rules.size() && ++idx[k] == rules[k].nodes.size()) idx[k++] = 0;
    if (k == rules.size()) break;
  }
  return g;
}

SphereGrid default_sphere_grid(int m) {
  switch (m) {
    case 2: return make_sphere_grid(2, 1, 64);
    case 3: return make_sphere_grid(3, 16, 32);
    case 4: return make_sphere_grid(4, 16, 32);
    default: return make_sphere_grid(m, 8, 16);
  }
}

Tensor4 sphere_moment4(int m) {
  require(m >= 2, ErrorCode::InvalidDimension, "sphere_moment4 needs m >= 2");
  const double c = sphere_area(m) / (m * (m + 2.0));
  Tensor4 t(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc)
        for (int d = 0; d < m; ++d)
          t(a, b, cc, d) = c * ((a == b && cc == d) + (a == cc && b == d) + (a == d && b == cc));
  return t;
}

MonteCarloMoments monte_carlo_moment4(int m, std::size_t samples, std::mt19937_64& rng) {
  require(m >= 2, ErrorCode::InvalidDimension, "monte_carlo_moment4 needs m >= 2");
  require(samples >= 2, ErrorCode::InvalidArgument, "need at least two samples");
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t n4 = static_cast<std::size_t>(m) * m * m * m;
  std::vector<double> sum(n4, 0.0), sum_sq(n4, 0.0);
  Vector x(m);
  for (std::size_t s = 0; s < samples; ++s) {
    for (int i = 0; i < m; ++i) x(i) = normal(rng);
    x /= x.norm();
    std::size_t idx = 0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d, ++idx) {
            const double v = x(a) * x(b) * x(c) * x(d);
            sum[idx] += v;
            sum_sq[idx] += v * v;
          }
  }
  const double area = sphere_area(m);
  const double n = static_cast<double>(samples);
  MonteCarloMoments out{Tensor4(m), Tensor4(m)};
  for (std::size_t i = 0; i < n4; ++i) {
    const double mean = sum[i] / n;
    const double var = std::max(0.0, (sum_sq[i] / n - mean * mean) * n / (n - 1));
    out.mean.data()[i] = area * mean;
    out.standard_error.data()[i] = area * std::sqrt(var / n);
  }
  return out;
}

}  // namespace alegeo
