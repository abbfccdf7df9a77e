#include <doctest.h>

#include "alegeo/core/report.hpp"
#include "alegeo/core/sphere.hpp"
#include "alegeo/core/verify.hpp"

#include <json.hpp>

#include <algorithm>

using namespace alegeo;

TEST_SUITE("verify") {
  TEST_CASE("a sign flip in the sphere moments makes the Monte Carlo property fail") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.quick = true;
    VerifyOptions mutated;
    mutated.sphere_moments = [](int m) { return -1.0 * sphere_moment4(m); };
    const CommandResult r = run_verify(cfg, &mutated);
    CHECK(r.exit_status == 1);
    const auto j = nlohmann::json::parse(r.json);
    CHECK_FALSE(j["verify"]["all_passed"].get<bool>());
    std::vector<std::string> failed = j["verify"]["failed"];
    for (int m : {3, 4, 5}) {
      const std::string name = "obstruction: sphere moments vs Monte Carlo, m = " + std::to_string(m);
      CHECK(std::find(failed.begin(), failed.end(), name) != failed.end());
    }
    CHECK(r.summary.find("FAIL") != std::string::npos);
  }

  TEST_CASE("quick suite passes and is deterministic") {
    VerifyOptions opt;
    opt.quick = true;
    const VerifyReport a = run_verification(opt);
    for (const auto& f : a.failed()) MESSAGE(f);
    CHECK(a.all_passed());
    const VerifyReport b = run_verification(opt);
    REQUIRE(a.properties.size() == b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
      CHECK(a.properties[i].name == b.properties[i].name);
      CHECK(a.properties[i].measured == b.properties[i].measured);
    }
    CHECK(a.table().find("all properties passed") != std::string::npos);
  }
}
