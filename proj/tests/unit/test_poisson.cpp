#include <doctest.h>

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/operators.hpp"
#include "alegeo/core/poisson.hpp"

#include <cmath>

using namespace alegeo;

TEST_SUITE("poisson") {
  TEST_CASE("Eguchi-Hanson Poisson solution") {
    std::shared_ptr<const RadialAleModel> eh = model_eguchi_hanson(1.0);
    const auto sol = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(eh));
    CHECK(sol->b_coeff() == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    CHECK(poisson_volume(*eh, *sol) == doctest::Approx(-M_PI * M_PI / 12.0).epsilon(1e-5));
    Vector x(4);
    x << 1.0, 2.0, -0.5, 0.7;
    CHECK(std::abs(sol->laplacian_residual(x)) < 1e-8);
    CHECK(sol->to_csv().rfind("r,u,du,d2u\n", 0) == 0);

    const DeformationField o(sol);
    CHECK(std::abs(trace(*eh->chart(), o, x)) < 1e-8);
    CHECK(deformation_l2_norm(*sol) == doctest::Approx(4.0 * M_PI).epsilon(1e-6));
  }

  TEST_CASE("flat cone has u = r^2 exactly") {
    std::shared_ptr<const RadialAleModel> f = model_flat_cone(4, 2);
    const RadialPoissonSolution sol = solve_poisson_radial(f);
    CHECK(sol.b_coeff() == 0.0);
    CHECK(poisson_volume(*f, sol) == 0.0);
  }
}
