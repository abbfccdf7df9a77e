#pragma once

#include "alegeo/core/tensor.hpp"

#include <random>
#include <vector>

namespace alegeo {

/// Area of the unit sphere S^{m-1} in R^m.
double sphere_area(int m);

/// Tensor-product Gauss rule on S^{m-1} in hyperspherical angles. Polar angles
/// use Gauss-Legendre or Gauss-Chebyshev (second kind) nodes in cos(phi)
/// depending on the parity of the sine weight; the azimuth is equispaced.
/// Weights sum to sphere_area(m).
struct SphereGrid {
  int dim = 0;
  std::vector<Vector> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

SphereGrid make_sphere_grid(int m, int n_polar, int n_azimuth);

/// Default resolution: 16 x 16 x 32 for m = 4, coarser for larger m.
SphereGrid default_sphere_grid(int m);

/// int_{S^{m-1}} x^a x^b x^c x^d dsigma in closed form.
Tensor4 sphere_moment4(int m);

/// Monte-Carlo estimate of the same moments from Gaussian-normalized samples,
/// with per-entry standard errors.
struct MonteCarloMoments {
  Tensor4 mean;
  Tensor4 standard_error;
};
MonteCarloMoments monte_carlo_moment4(int m, std::size_t samples, std::mt19937_64& rng);

}  // namespace alegeo
