#include <doctest.h>

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/sphere.hpp"
#include "alegeo/core/verify.hpp"

#include <cmath>

using namespace alegeo;

namespace {
const AleInvariants& eh_invariants() {
  static const AleInvariants inv = [] {
    const auto eh = model_eguchi_hanson(1.0);
    return compute_invariants(*eh, default_schedule(*eh));
  }();
  return inv;
}
}  // namespace

TEST_SUITE("obstruction") {
  TEST_CASE("H satisfies its defining identities") {
    std::mt19937_64 rng(11);
    const auto d = orbifold_custom(5, -2.0, WeylTensor::project(random_weyl(5, rng)), 1);
    const QuadraticTensorH h = build_H(d);
    Vector x(5);
    x << 0.3, -1.0, 0.4, 0.8, -0.2;
    CHECK(h_residuals(h, x).max() < 1e-9);
  }

  TEST_CASE("sphere moment closed forms") {
    CHECK(sphere_moment4(3)(0, 0, 0, 0) == doctest::Approx(4.0 * M_PI / 5.0));
    CHECK(sphere_moment4(4)(0, 0, 1, 1) == doctest::Approx(M_PI * M_PI / 12.0));
    CHECK(sphere_moment4(4)(0, 1, 2, 2) == 0.0);
  }

  TEST_CASE("Monte Carlo detects a corrupted moment tensor") {
    std::mt19937_64 rng(kDefaultSeed);
    CHECK(compare_sphere_moments(3, sphere_moment4(3), 200000, rng).passed);
    CHECK_FALSE(compare_sphere_moments(3, -1.0 * sphere_moment4(3), 200000, rng).passed);
  }

  TEST_CASE("hyperbolic data with Eguchi-Hanson is obstructed with value -3 V") {
    const ObstructionReport r = obstruction_value(orbifold_hyperbolic(4, 2), eh_invariants());
    CHECK(r.value == doctest::Approx(-3.0 * eh_invariants().renormalized_volume).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.value == doctest::Approx(-r.lambda0_closed / 16.0));
  }

  TEST_CASE("error codes") {
    auto code = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    CHECK(code([] { obstruction_value(orbifold_custom(4, 0.5, WeylTensor::zero(4), 2), eh_invariants()); }) ==
          ErrorCode::PositiveEinsteinConstant);
    CHECK(code([] { obstruction_value(orbifold_hyperbolic(4, 3), eh_invariants()); }) ==
          ErrorCode::GroupMismatch);
    CHECK(code([] { obstruction_value(orbifold_hyperbolic(5, 2), eh_invariants()); }) ==
          ErrorCode::DimensionMismatch);
  }

  TEST_CASE("full pipeline: both lambda0 routes agree") {
    std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);
    const ObstructionPipeline p = evaluate_obstruction(eh, orbifold_hyperbolic(4, 2), default_schedule(*eh));
    CHECK(p.report.has_pairing);
    CHECK(p.report.route_discrepancy < 1e-2);
    CHECK(p.report.verdict == Verdict::Obstructed);
  }
}
