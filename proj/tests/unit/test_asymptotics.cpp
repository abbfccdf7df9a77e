#include <doctest.h>

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/poisson.hpp"

#include <cmath>

using namespace alegeo;

TEST_SUITE("asymptotics") {
  TEST_CASE("Eguchi-Hanson renormalized volume is -pi^2 a^4 / 12") {
    const auto eh = model_eguchi_hanson(1.0);
    const AleInvariants inv = compute_invariants(*eh, default_schedule(*eh));
    CHECK(inv.renormalized_volume == doctest::Approx(-M_PI * M_PI / 12.0).epsilon(1e-6));
    CHECK(inv.renormalized_volume < -10.0 * inv.volume_error);
    CHECK(inv.gauge_residual <= 0.05);
    CHECK(inv.asymptotic_weyl.norm() > 0.0);
    CHECK(inv.volume_table.rows.size() == 4);
  }

  TEST_CASE("flat cone invariants vanish") {
    const auto f = model_flat_cone(4, 2);
    const AleInvariants inv = compute_invariants(*f, default_schedule(*f));
    CHECK(inv.renormalized_volume == 0.0);
    CHECK(inv.asymptotic_weyl.norm() == 0.0);
  }

  TEST_CASE("short schedules are rejected") {
    const auto eh = model_eguchi_hanson(1.0);
    CHECK_THROWS_AS(renormalized_volume(*eh, {2.0, 4.0, 8.0}), Error);
  }

  TEST_CASE("convergence table CSV has the documented columns") {
    const ConvergenceTable t = richardson_table("t", {1.0, 2.0, 4.0}, {1.5, 1.125, 1.03125}, 2.0);
    CHECK(t.to_csv().rfind("radius,value,extrapolated,err_estimate\n", 0) == 0);
    CHECK(t.limit() == doctest::Approx(1.0));
  }
}
