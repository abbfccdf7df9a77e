#include "alegeo/alegeo.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_for(alegeo_status s) { return alegeo_status_is_input_error(s) ? kExitConfig : kExitNumerical; }

int report_error(alegeo_status s) {
  std::cerr << "error: " << alegeo_last_error() << '\n';
  return exit_for(s);
}

std::string get(const alegeo_config* cfg, const char* key) {
  char* v = nullptr;
  if (alegeo_config_get(cfg, key, &v) != ALEGEO_OK) return {};
  std::string out(v);
  alegeo_string_free(v);
  return out;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

// "dir/report.json" -> "dir/report_<name>.csv".
std::string table_path(const std::string& out, const std::string& name) {
  std::string stem = out;
  const auto slash = stem.find_last_of('/');
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) stem.erase(dot);
  return stem + "_" + name + ".csv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of ALE spaces and the Einstein orbifold obstruction"};
  std::string command, config_path;
  app.add_option("command", command, "invariants | obstruction | verify")
      ->check(CLI::IsMember({"invariants", "obstruction", "verify"}));
  app.add_option("--config", config_path, "INI config file; flags override it");

  // Flags are passed through as text and validated by the library.
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
    std::string value;
  };
  std::vector<Flag> flags = {
      {"--model", "model.name", "eguchi-hanson | flat", {}},
      {"--a", "model.a", "Eguchi-Hanson bolt size", {}},
      {"--dim", "model.dim", "dimension (flat cone)", {}},
      {"--gamma", "model.gamma", "order of the group at infinity", {}},
      {"--orbifold", "orbifold.preset", "hyperbolic | custom", {}},
      {"--mu", "orbifold.mu", "Einstein constant of custom orbifold data", {}},
      {"--weyl", "orbifold.weyl", "zero | random | comma-separated dim^4 components", {}},
      {"--schedule", "schedule.radii", "comma-separated radii in length-scale units", {}},
      {"--seed", "run.seed", "RNG seed", {}},
      {"--out", "run.out", "JSON report path; CSV tables are written alongside", {}},
      {"--route-tolerance", "tolerances.route", "relative agreement required of the two lambda0 routes", {}},
      {"--mc-samples", "verify.mc_samples", "Monte Carlo samples for the sphere-moment check", {}},
  };
  for (Flag& f : flags) app.add_option(f.name, f.value, f.help);
  bool quick = false;
  app.add_flag("--quick", quick, "run the fast verification subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  alegeo_config* cfg = nullptr;
  alegeo_status st;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file " << config_path << '\n';
      return kExitConfig;
    }
    std::stringstream text;
    text << in.rdbuf();
    st = alegeo_config_parse(text.str().c_str(), &cfg);
  } else {
    st = alegeo_config_new(&cfg);
  }
  if (st != ALEGEO_OK) return report_error(st);

  int code = kExitOk;
  auto set = [&](const char* key, const std::string& value) {
    if (code != kExitOk) return;
    const alegeo_status s = alegeo_config_set(cfg, key, value.c_str());
    if (s != ALEGEO_OK) code = report_error(s);
  };
  if (!command.empty()) set("run.command", command);
  for (const Flag& f : flags)
    if (app.count(f.name)) set(f.key, f.value);
  if (quick) set("run.quick", "true");
  if (code != kExitOk) {
    alegeo_config_free(cfg);
    return code;
  }

  std::cerr << "seed " << get(cfg, "run.seed") << '\n';
  alegeo_report* rep = nullptr;
  st = alegeo_run(cfg, &rep);
  const std::string out = get(cfg, "run.out");
  alegeo_config_free(cfg);
  if (st != ALEGEO_OK) return report_error(st);

  if (out.empty()) {
    std::cout << alegeo_report_json(rep);
    std::cerr << alegeo_report_summary(rep);
  } else {
    bool ok = write_file(out, alegeo_report_json(rep));
    for (size_t i = 0; i < alegeo_report_table_count(rep); ++i)
      ok = ok && write_file(table_path(out, alegeo_report_table_name(rep, i)),
                            alegeo_report_table_csv(rep, i));
    std::cout << alegeo_report_summary(rep);
    if (!ok) {
      std::cerr << "error: cannot write report to " << out << '\n';
      alegeo_report_free(rep);
      return kExitConfig;
    }
  }
  code = alegeo_report_exit_status(rep) == 0 ? kExitOk : kExitVerifyFailed;
  alegeo_report_free(rep);
  return code;
}
