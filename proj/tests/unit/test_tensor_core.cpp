#include <doctest.h>

#include "alegeo/core/curvature.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/operators.hpp"

#include <cmath>

using namespace alegeo;

namespace {
Vector point(std::initializer_list<double> v) {
  Vector x(static_cast<int>(v.size()));
  int i = 0;
  for (double c : v) x(i++) = c;
  return x;
}
}  // namespace

TEST_SUITE("tensor-core") {
  TEST_CASE("round sphere has positive sectional curvature and Ric = (m-1) g") {
    const auto s = stereographic_sphere_chart(3);
    const Vector x = point({0.3, -0.2, 0.5});
    const Connection c = connection(*s, x);
    const Tensor4 r = riemann(c);
    CHECK(r(0, 1, 0, 1) > 0.0);
    const Matrix ric = ricci(r, c.g);
    CHECK((ric - 2.0 * c.g).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(scalar_curvature(ric, c.g) == doctest::Approx(6.0).epsilon(1e-10));
  }

  TEST_CASE("curvature symmetries on Eguchi-Hanson") {
    const auto eh = model_eguchi_hanson(1.0);
    const Tensor4 r = riemann(*eh->chart(), point({1.5, 0.7, -0.4, 0.9}));
    CHECK(curvature_symmetry_residuals(r).max() < 1e-9);
    CHECK(r.norm() > 1e-3);
  }

  TEST_CASE("Weyl decomposition round trip and rejection of non-Einstein input") {
    std::mt19937_64 rng(7);
    const WeylTensor w = WeylTensor::project(random_weyl(4, rng));
    const Matrix id = Matrix::Identity(4, 4);
    const Tensor4 r = einstein_curvature(w, id, -3.0);
    CHECK((weyl_decompose(r, id, -3.0).tensor() - w.tensor()).norm() < 1e-12);
    CHECK_THROWS_AS(weyl_decompose(r, id, 1.0), Error);
  }

  TEST_CASE("hyperbolic chart is Einstein with mu = -(m-1)") {
    const auto h = hyperbolic_normal_chart(4, 3.0);
    const Connection c = connection(*h, point({0.5, 0.2, -0.3, 0.1}));
    CHECK((ricci(riemann(c), c.g) + 3.0 * c.g).cwiseAbs().maxCoeff() < 1e-9);
    const MetricField g(h);
    CHECK((apply_P(*h, g, point({0.5, 0.2, -0.3, 0.1})) - 3.0 * c.g).cwiseAbs().maxCoeff() < 1e-6);
  }

  TEST_CASE("finite-difference chart agrees with the analytic one") {
    const auto eh = model_eguchi_hanson(1.0);
    const FiniteDifferenceChart fd(eh->chart());
    const Vector x = point({2.0, 0.5, 0.3, -1.0});
    const Tensor4 a = riemann(*eh->chart(), x), f = riemann(fd, x);
    CHECK((a - f).norm() / a.norm() < 1e-6);
  }

  TEST_CASE("delta* of an exact form on flat space") {
    const EuclideanChart flat(3);
    const CovectorField du(3, [](const Vector& x) { return Vector(2.0 * x); },
                           [](const Vector&) { return Matrix(2.0 * Matrix::Identity(3, 3)); });
    CHECK((delta_star(flat, du, point({1, 2, 3})) - 2.0 * Matrix::Identity(3, 3)).norm() < 1e-12);
  }

  TEST_CASE("singular metric is rejected") {
    const FunctionChart bad(2, [](const Vector&) { return Matrix(Matrix::Zero(2, 2)); },
                            [](const Vector&) { return true; });
    CHECK_THROWS_AS(bad.checked_metric(point({1.0, 1.0})), Error);
  }
}
