#include <doctest.h>

#include "alegeo/core/error.hpp"
#include "alegeo/core/gluing.hpp"

#include <cmath>

using namespace alegeo;

namespace {
GluedGeometry make(double delta = 0.1) {
  return GluedGeometry(model_eguchi_hanson(1.0), orbifold_chart(orbifold_hyperbolic(4, 2), 1.0), delta);
}
}  // namespace

TEST_SUITE("gluing") {
  TEST_CASE("scales and seams") {
    const GluedGeometry g = make();
    CHECK(g.t() == doctest::Approx(1e-4));
    CHECK(g.inner_seam() == doctest::Approx(1e-3));
    CHECK(g.outer_seam() == doctest::Approx(0.1));
    CHECK(g.cutoff(1e-4) == 1.0);
    CHECK(g.cutoff(0.5) == 0.0);
    Vector u = Vector::Zero(4);
    u(0) = 1.0;
    const GluedPoint b{Region::Bubble, u / g.delta()};
    const GluedPoint n{Region::Neck, g.inner_seam() * u};
    CHECK(radius_function(g, b) == doctest::Approx(radius_function(g, n)).epsilon(1e-12));
    CHECK_THROWS_AS(radius_function(g, GluedPoint{Region::Neck, 0.5 * u}), Error);
  }

  TEST_CASE("glued metric is the bubble metric inside and the orbifold metric outside") {
    const GluedGeometry g = make();
    Vector x(4);
    x << 2.0, 0.1, 0.0, -0.3;
    const GluedPoint p{Region::Bubble, x};
    CHECK((gluing_metric(g, p) - g.t() * g.t() * g.bubble_chart().metric(x)).norm() == 0.0);
    const GluedPoint q{Region::Orbifold, 0.2 * x / x.norm()};
    CHECK((gluing_metric(g, q) - g.orbifold().metric(q.coords)).norm() == 0.0);
  }

  TEST_CASE("weighted norm: k != 0 rejected, zero field has norm 0") {
    const GluedGeometry g = make();
    const GluedField zero = [](const GluedPoint&) { return Matrix(Matrix::Zero(4, 4)); };
    WeightedNormSpec spec;
    CHECK(weighted_norm_C0(g, zero, spec).value == 0.0);
    spec.k = 1;
    CHECK_THROWS_AS(weighted_norm_C0(g, zero, spec), Error);
  }

  TEST_CASE("profile field norm is close to 2 and the grid report is well formed") {
    const GluedGeometry g = make();
    const GluedField f = [&](const GluedPoint& p) {
      return Matrix(weight_profile(g, 0.5, 0.5, radius_function(g, p)) * gluing_metric(g, p) / 2.0);
    };
    const WeightedNormResult r = weighted_norm_C0(g, f, WeightedNormSpec{});
    CHECK(r.value >= 0.5);
    CHECK(r.value <= 2.0);
    const std::string csv = weighted_norm_profile_csv(g, f, WeightedNormSpec{}, 16);
    CHECK(csv.rfind("r_t,region,chi,min_metric_eigenvalue,bubble_term,orbifold_term\n", 0) == 0);
    CHECK(csv.find(",neck,") != std::string::npos);
  }

  TEST_CASE("invalid gluing parameters") {
    CHECK_THROWS_AS(make(1.5), Error);
    CHECK_THROWS_AS(GluedGeometry(model_eguchi_hanson(1.0), orbifold_chart(orbifold_hyperbolic(4, 2), 0.1), 0.1),
                    Error);
  }
}
