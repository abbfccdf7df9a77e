#include <doctest.h>

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/models.hpp"
#include "alegeo/core/numerics.hpp"

#include <cmath>

using namespace alegeo;

TEST_SUITE("ale-models") {
  TEST_CASE("Eguchi-Hanson is Ricci-flat") {
    const auto eh = model_eguchi_hanson(1.0);
    CHECK(ricci_residual(*eh, log_space(2.0, 32.0, 5)) < 1e-7);
    CHECK(eh->dim() == 4);
    CHECK(eh->group_order() == 2);
  }

  TEST_CASE("flat cone volume density") {
    CHECK(model_flat_cone(3, 1)->volume_density(2.0) == doctest::Approx(16.0 * M_PI));
    CHECK(model_flat_cone(4, 5)->volume_density(1.0) == doctest::Approx(2.0 * M_PI * M_PI / 5.0));
  }

  TEST_CASE("ALE decay rate of Eguchi-Hanson is 4") {
    const auto eh = model_eguchi_hanson(1.0);
    CHECK(ale_decay_exponent(*eh, {8.0, 16.0, 32.0, 64.0}) == doctest::Approx(4.0).epsilon(0.075));
  }

  TEST_CASE("invalid model parameters") {
    CHECK_THROWS_AS(model_eguchi_hanson(-1.0), Error);
    CHECK_THROWS_AS(model_flat_cone(4, 0), Error);
  }

  TEST_CASE("orbifold presets") {
    const auto h = orbifold_hyperbolic(4, 2);
    CHECK(h.mu == -3.0);
    CHECK(h.weyl.norm() < 1e-12);
    CHECK(einstein_residual(h) < 1e-12);
    std::mt19937_64 rng(3);
    Tensor4 junk = random_weyl(4, rng);
    junk(0, 0, 0, 0) += 1.0;
    CHECK_THROWS_AS(orbifold_custom(4, -1.0, junk, 2), Error);
  }
}
