#include <doctest.h>

#include "alegeo/alegeo.h"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ALEGEO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("alegeo_unit_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("config handle round trip and errors") {
    alegeo_config* cfg = nullptr;
    REQUIRE(alegeo_config_parse("[model]\nname = flat\ndim = 5\ngamma = 3\n", &cfg) == ALEGEO_OK);
    char* ini = nullptr;
    REQUIRE(alegeo_config_to_ini(cfg, &ini) == ALEGEO_OK);
    alegeo_config* again = nullptr;
    REQUIRE(alegeo_config_parse(ini, &again) == ALEGEO_OK);
    char* ini2 = nullptr;
    REQUIRE(alegeo_config_to_ini(again, &ini2) == ALEGEO_OK);
    CHECK(std::string(ini) == std::string(ini2));
    char* dim = nullptr;
    REQUIRE(alegeo_config_get(again, "model.dim", &dim) == ALEGEO_OK);
    CHECK(std::string(dim) == "5");
    alegeo_string_free(dim);
    alegeo_string_free(ini);
    alegeo_string_free(ini2);

    CHECK(alegeo_config_set(cfg, "model.nope", "1") == ALEGEO_ERR_INVALID_ARGUMENT);
    CHECK(std::string(alegeo_last_error()).find("model.nope") != std::string::npos);
    CHECK(alegeo_config_set(cfg, "schedule.radii", "8,4,16") == ALEGEO_OK);
    CHECK(alegeo_config_validate(cfg) == ALEGEO_ERR_INVALID_PARAMETER);
    CHECK(alegeo_status_is_input_error(ALEGEO_ERR_INVALID_PARAMETER));
    CHECK_FALSE(alegeo_status_is_input_error(ALEGEO_ERR_NO_CONVERGENCE));
    CHECK(std::string(alegeo_status_name(ALEGEO_ERR_GROUP_MISMATCH)) == "GroupMismatch");
    alegeo_config_free(cfg);
    alegeo_config_free(again);
    CHECK(alegeo_config_parse(nullptr, &cfg) == ALEGEO_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("granular handles") {
    alegeo_model* m = nullptr;
    REQUIRE(alegeo_model_eguchi_hanson(1.0, &m) == ALEGEO_OK);
    CHECK(alegeo_model_dim(m) == 4);
    double v = 0.0, b = 0.0;
    REQUIRE(alegeo_model_poisson_volume(m, &v, &b) == ALEGEO_OK);
    CHECK(v < 0.0);
    CHECK(b > 0.0);
    alegeo_invariants* inv = nullptr;
    REQUIRE(alegeo_invariants_compute(m, nullptr, 0, &inv) == ALEGEO_OK);
    double vol = 0.0, err = 0.0;
    alegeo_invariants_volume(inv, &vol, &err);
    CHECK(std::abs(vol - v) < 5e-3 * std::abs(v));
    double w[256];
    CHECK(alegeo_invariants_weyl(inv, w, 256) == ALEGEO_OK);
    CHECK(alegeo_invariants_weyl(inv, w, 10) == ALEGEO_ERR_DIMENSION_MISMATCH);
    alegeo_orbifold* orb = nullptr;
    REQUIRE(alegeo_orbifold_hyperbolic(4, 2, &orb) == ALEGEO_OK);
    double value = 0.0;
    alegeo_verdict verdict;
    REQUIRE(alegeo_obstruction_value(orb, inv, &value, nullptr, &verdict) == ALEGEO_OK);
    CHECK(verdict == ALEGEO_VERDICT_OBSTRUCTED);
    CHECK(value == doctest::Approx(-3.0 * vol));
    alegeo_orbifold* pos = nullptr;
    REQUIRE(alegeo_orbifold_custom(4, 1.0, nullptr, 0, 2, &pos) == ALEGEO_OK);
    CHECK(alegeo_obstruction_value(pos, inv, &value, nullptr, &verdict) ==
          ALEGEO_ERR_POSITIVE_EINSTEIN_CONSTANT);
    alegeo_orbifold_free(pos);
    alegeo_orbifold_free(orb);
    alegeo_invariants_free(inv);
    alegeo_model_free(m);
    CHECK(alegeo_model_flat_cone(2, 1, &m) != ALEGEO_OK);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("invariants of the flat cone, with CSV tables next to the report") {
    const fs::path dir = scratch("flat");
    const fs::path out = dir / "flat.json";
    CHECK(run_cli("invariants --model flat --dim 4 --gamma 2 --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["ale_invariants"]["V"].get<double>() == 0.0);
    CHECK(j["ale_invariants"]["W_inf_norm"].get<double>() == 0.0);
    CHECK(fs::exists(dir / "flat_renormalized_volume.csv"));
    CHECK(fs::exists(dir / "flat_asymptotic_weyl.csv"));
    CHECK(fs::exists(dir / "flat_poisson_solution.csv"));
  }

  TEST_CASE("flat bubble with zero Weyl data is unobstructed") {
    const fs::path out = scratch("flatobs") / "r.json";
    CHECK(run_cli("obstruction --orbifold custom --mu -3 --weyl zero --model flat --dim 4 --gamma 2 --out " +
                  out.string()) == 0);
    const auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["obstruction"]["value"].get<double>() == 0.0);
    CHECK(j["obstruction"]["verdict"] == "unobstructed");
  }

  TEST_CASE("config errors exit with 2") {
    CHECK(run_cli("obstruction --orbifold custom --mu 1 --model flat") == 2);
    CHECK(run_cli("invariants --schedule 8,4,16") == 2);
    CHECK(run_cli("invariants --schedule=-8,16,32") == 2);
    CHECK(run_cli("invariants --model klein") == 2);
    CHECK(run_cli("invariants --gamma 0 --model flat") == 2);
    CHECK(run_cli("invariants --bogus 1") == 2);
    CHECK(run_cli("frobnicate") == 2);
    const fs::path dir = scratch("cfg");
    std::ofstream(dir / "bad.ini") << "[model]\ncolour = red\n";
    CHECK(run_cli("invariants --config " + (dir / "bad.ini").string()) == 2);
    CHECK(run_cli("invariants --config " + (dir / "missing.ini").string()) == 2);
  }

  TEST_CASE("numerical failures exit with 3") {
    CHECK(run_cli("invariants --model eguchi-hanson --schedule 1,2,4") == 3);
  }

  TEST_CASE("flags override the config file") {
    const fs::path dir = scratch("override");
    std::ofstream(dir / "run.ini") << "[run]\ncommand = invariants\n[model]\nname = flat\ndim = 3\ngamma = 1\n";
    const fs::path out = dir / "r.json";
    CHECK(run_cli("--config " + (dir / "run.ini").string() + " --dim 5 --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(read_file(out));
    CHECK(j["command"] == "invariants");
    CHECK(j["inputs"]["model"]["dim"] == 5);
    CHECK(j["inputs"]["model"]["gamma"] == 1);
  }
}
