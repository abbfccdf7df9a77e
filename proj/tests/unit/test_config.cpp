#include <doctest.h>

#include "alegeo/core/config.hpp"
#include "alegeo/core/error.hpp"
#include "alegeo/core/report.hpp"

#include <json.hpp>

using namespace alegeo;

namespace {
ErrorCode code_of(const RunConfig& c) {
  try {
    validate_config(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("config was accepted");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_SUITE("config") {
  TEST_CASE("parse, serialize, parse round trip") {
    const std::string text =
        "[run]\ncommand = obstruction\nseed = 42\nquick = yes\nout = r.json\n"
        "[model]\nname = eguchi-hanson\na = 0.1\n"
        "[orbifold]\npreset = custom\nmu = -2.5\nweyl = random\nweyl_scale = 0.30000000000000004\ngamma = 2\n"
        "[schedule]\nradii = 8, 16, 32.5, 64\n[tolerances]\nroute = 0.02\n";
    const RunConfig a = parse_config(text);
    CHECK(a.command == "obstruction");
    CHECK(a.seed == 42);
    CHECK(a.quick);
    CHECK(a.schedule == std::vector<double>{8, 16, 32.5, 64});
    const RunConfig b = parse_config(serialize_config(a));
    CHECK(a == b);
    CHECK(serialize_config(b) == serialize_config(a));
  }

  TEST_CASE("weyl component lists round trip") {
    RunConfig c;
    c.weyl = "list";
    c.weyl_entries.assign(256, 0.0);
    c.weyl_entries[3] = 1.0 / 3.0;
    CHECK(parse_config(serialize_config(c)) == c);
  }

  TEST_CASE("unknown keys and sections are rejected") {
    CHECK_THROWS_AS(parse_config("[model]\nsize = 3\n"), Error);
    CHECK_THROWS_AS(parse_config("[extra]\na = 1\n"), Error);
    CHECK_THROWS_AS(parse_config("a = 1\n"), Error);
    CHECK_THROWS_AS(parse_config("[model]\na = one\n"), Error);
    RunConfig c;
    CHECK_THROWS_AS(set_config_value(c, "model.colour", "red"), Error);
  }

  TEST_CASE("validation") {
    RunConfig c;
    c.schedule = {8, -16, 32};
    CHECK(code_of(c) == ErrorCode::InvalidParameter);
    c.schedule = {8, 32, 16};
    CHECK(code_of(c) == ErrorCode::InvalidParameter);
    c = RunConfig{};
    c.command = "obstruction";
    c.orbifold = "custom";
    c.mu = 0.0;
    CHECK(code_of(c) == ErrorCode::PositiveEinsteinConstant);
    c = RunConfig{};
    c.model = "flat";
    c.gamma = 0;
    CHECK(code_of(c) == ErrorCode::InvalidParameter);
    c = RunConfig{};
    c.command = "obstruction";
    c.orbifold_gamma = 0;
    CHECK(code_of(c) == ErrorCode::InvalidParameter);
    c = RunConfig{};
    c.dim = 5;
    CHECK(code_of(c) == ErrorCode::DimensionMismatch);
    CHECK_NOTHROW(validate_config(RunConfig{}));
  }

  TEST_CASE("schedule is in length-scale units") {
    RunConfig c;
    c.a = 2.0;
    c.schedule = {8, 16, 32};
    const auto m = make_model(c);
    CHECK(make_schedule(c, *m) == std::vector<double>{16, 32, 64});
  }

  TEST_CASE("invariants report for the flat cone") {
    RunConfig c;
    c.model = "flat";
    c.dim = 4;
    c.gamma = 2;
    const CommandResult r = run_command(c);
    const auto j = nlohmann::json::parse(r.json);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["ale_invariants"]["V"].get<double>() == 0.0);
    CHECK(j["ale_invariants"]["W_inf_norm"].get<double>() == 0.0);
    CHECK(j["poisson"]["b"].get<double>() == 0.0);
    CHECK(r.tables.size() == 3);
  }

  TEST_CASE("floats are written with 17 significant digits") {
    RunConfig c;
    c.model = "flat";
    c.a = 0.1;
    const CommandResult r = run_command(c);
    CHECK(r.json.find("\"a\": 0.10000000000000001") != std::string::npos);
  }
}
