#include "alegeo/core/config.hpp"

#include "alegeo/core/asymptotics.hpp"
#include "alegeo/core/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace alegeo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* what) {
  fail(ErrorCode::InvalidArgument, "config key '" + key + "': '" + value + "' is not " + what);
}

double to_double(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  double out = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) bad_value(key, v, "a number");
  return out;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  Int out = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) bad_value(key, v, "an integer");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  bad_value(key, v, "a boolean");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  return out;
}

std::string fmt(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string& key, const std::string& value)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"run.command", [](RunConfig& c, auto&, auto& v) { c.command = trim(v); }},
      {"run.seed", [](RunConfig& c, auto& k, auto& v) { c.seed = to_integer<std::uint64_t>(k, v); }},
      {"run.quick", [](RunConfig& c, auto& k, auto& v) { c.quick = to_bool(k, v); }},
      {"run.out", [](RunConfig& c, auto&, auto& v) { c.out = trim(v); }},
      {"model.name", [](RunConfig& c, auto&, auto& v) { c.model = trim(v); }},
      {"model.a", [](RunConfig& c, auto& k, auto& v) { c.a = to_double(k, v); }},
      {"model.dim", [](RunConfig& c, auto& k, auto& v) { c.dim = to_integer<int>(k, v); }},
      {"model.gamma", [](RunConfig& c, auto& k, auto& v) { c.gamma = to_integer<int>(k, v); }},
      {"orbifold.preset", [](RunConfig& c, auto&, auto& v) { c.orbifold = trim(v); }},
      {"orbifold.mu", [](RunConfig& c, auto& k, auto& v) { c.mu = to_double(k, v); }},
      {"orbifold.weyl",
       [](RunConfig& c, auto& k, auto& v) {
         const std::string s = trim(v);
         if (s == "zero" || s == "random") {
           c.weyl = s;
           c.weyl_entries.clear();
         } else {
           c.weyl = "list";
           c.weyl_entries = to_list(k, s);
         }
       }},
      {"orbifold.weyl_scale", [](RunConfig& c, auto& k, auto& v) { c.weyl_scale = to_double(k, v); }},
      {"orbifold.gamma",
       [](RunConfig& c, auto& k, auto& v) { c.orbifold_gamma = to_integer<int>(k, v); }},
      {"schedule.radii",
       [](RunConfig& c, auto& k, auto& v) {
         c.schedule = trim(v).empty() ? std::vector<double>{} : to_list(k, v);
       }},
      {"tolerances.route", [](RunConfig& c, auto& k, auto& v) { c.route_tolerance = to_double(k, v); }},
      {"verify.mc_samples",
       [](RunConfig& c, auto& k, auto& v) { c.mc_samples = to_integer<std::size_t>(k, v); }},
  };
  return table;
}

}  // namespace

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  require(it != setters().end(), ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  it->second(cfg, key, value);
}

std::string get_config_value(const RunConfig& cfg, const std::string& key) {
  require(setters().count(key) > 0, ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(serialize_config(cfg));
  pt::ini_parser::read_ini(in, tree);
  return tree.get<std::string>(pt::ptree::path_type(key, '.'), "");
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& [k, v] : setters()) out.push_back(k);
  return out;
}

void merge_config(RunConfig& cfg, const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorCode::InvalidArgument, std::string("config syntax: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    require(!body.empty() || body.data().empty(), ErrorCode::InvalidArgument,
            "config key '" + section + "' outside a section");
    const auto& keys = setters();
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const auto& kv) {
      return kv.first.compare(0, section.size() + 1, section + ".") == 0;
    });
    require(known, ErrorCode::InvalidArgument, "unknown config section [" + section + "]");
    for (const auto& [key, value] : body)
      set_config_value(cfg, section + "." + key, value.data());
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  merge_config(cfg, text);
  return cfg;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[run]\n"
     << "command = " << c.command << "\n"
     << "seed = " << c.seed << "\n"
     << "quick = " << (c.quick ? "true" : "false") << "\n";
  if (!c.out.empty()) os << "out = " << c.out << "\n";
  os << "\n[model]\n"
     << "name = " << c.model << "\n"
     << "a = " << fmt(c.a) << "\n"
     << "dim = " << c.dim << "\n"
     << "gamma = " << c.gamma << "\n"
     << "\n[orbifold]\n"
     << "preset = " << c.orbifold << "\n"
     << "mu = " << fmt(c.mu) << "\n"
     << "weyl = " << (c.weyl == "list" ? fmt_list(c.weyl_entries) : c.weyl) << "\n"
     << "weyl_scale = " << fmt(c.weyl_scale) << "\n";
  if (c.orbifold_gamma) os << "gamma = " << *c.orbifold_gamma << "\n";
  if (!c.schedule.empty()) os << "\n[schedule]\nradii = " << fmt_list(c.schedule) << "\n";
  os << "\n[tolerances]\nroute = " << fmt(c.route_tolerance) << "\n"
     << "\n[verify]\nmc_samples = " << c.mc_samples << "\n";
  return os.str();
}

void validate_config(const RunConfig& c) {
  auto param = [](bool ok, const std::string& what) { require(ok, ErrorCode::InvalidParameter, what); };
  param(c.command == "invariants" || c.command == "obstruction" || c.command == "verify",
        "run.command must be invariants, obstruction or verify");
  param(c.model == "eguchi-hanson" || c.model == "flat", "model.name must be eguchi-hanson or flat");
  param(c.gamma >= 1, "model.gamma: |Gamma| must be at least 1");
  param(c.dim >= 3, "model.dim must be at least 3");
  if (c.model == "eguchi-hanson") {
    param(c.a > 0.0, "model.a must be positive");
    require(c.dim == 4, ErrorCode::DimensionMismatch, "model.dim: eguchi-hanson is 4-dimensional");
    require(c.gamma == 2, ErrorCode::GroupMismatch, "model.gamma: eguchi-hanson has |Gamma| = 2");
  }
  if (!c.schedule.empty()) {
    param(c.schedule.size() >= 3, "schedule.radii needs at least three radii");
    for (std::size_t i = 0; i < c.schedule.size(); ++i) {
      param(c.schedule[i] > 0.0, "schedule.radii must be positive");
      if (i) param(c.schedule[i] > c.schedule[i - 1], "schedule.radii must be strictly increasing");
    }
  }
  param(c.route_tolerance > 0.0, "tolerances.route must be positive");
  param(c.mc_samples >= 1000, "verify.mc_samples must be at least 1000");
  if (c.command != "obstruction") return;
  param(c.orbifold == "hyperbolic" || c.orbifold == "custom",
        "orbifold.preset must be hyperbolic or custom");
  if (c.orbifold_gamma) {
    param(*c.orbifold_gamma >= 1, "orbifold.gamma: |Gamma| must be at least 1");
    require(*c.orbifold_gamma == c.gamma, ErrorCode::GroupMismatch,
            "orbifold.gamma differs from the model's group order");
  }
  if (c.orbifold == "custom") {
    require(c.mu < 0.0, ErrorCode::PositiveEinsteinConstant,
            "orbifold.mu must be negative: the obstruction is stated for negative Einstein orbifolds");
    param(c.weyl == "zero" || c.weyl == "random" || c.weyl == "list",
          "orbifold.weyl must be zero, random or a list");
    if (c.weyl == "list") {
      const std::size_t n = static_cast<std::size_t>(c.dim) * c.dim * c.dim * c.dim;
      require(c.weyl_entries.size() == n, ErrorCode::DimensionMismatch,
              "orbifold.weyl needs dim^4 = " + std::to_string(n) + " entries");
    }
  }
}

std::shared_ptr<const RadialAleModel> make_model(const RunConfig& c) {
  if (c.model == "eguchi-hanson") return model_eguchi_hanson(c.a);
  return model_flat_cone(c.dim, c.gamma);
}

OrbifoldPointData make_orbifold(const RunConfig& c) {
  const int g = c.orbifold_gamma.value_or(c.gamma);
  if (c.orbifold == "hyperbolic") return orbifold_hyperbolic(c.dim, g);
  if (c.weyl == "list") return orbifold_custom(c.dim, c.mu, Tensor4::from_flat(c.dim, c.weyl_entries), g);
  if (c.weyl == "random" && c.dim >= 4) {
    std::mt19937_64 rng(c.seed);
    return orbifold_custom(c.dim, c.mu, WeylTensor::project(c.weyl_scale * random_weyl(c.dim, rng)), g);
  }
  return orbifold_custom(c.dim, c.mu, WeylTensor::zero(c.dim), g);
}

std::vector<double> make_schedule(const RunConfig& c, const RadialAleModel& model) {
  if (c.schedule.empty()) return default_schedule(model);
  std::vector<double> out;
  for (double r : c.schedule) out.push_back(r * model.length_scale());
  return out;
}

}  // namespace alegeo
