#pragma once

#include "alegeo/core/models.hpp"
#include "alegeo/core/obstruction.hpp"
#include "alegeo/core/verify.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace alegeo {

/// Settings of one CLI run. Text form is INI:
///
///   [run]        command = invariants | obstruction | verify, seed, quick, out
///   [model]      name = eguchi-hanson | flat, a, dim, gamma
///   [orbifold]   preset = hyperbolic | custom, mu, weyl = zero | random | v0,v1,...
///                weyl_scale, gamma (defaults to the model's)
///   [schedule]   radii = comma-separated multiples of the model length scale
///   [tolerances] route
///   [verify]     mc_samples
///
/// Every key is also addressable as "section.key" through set_config_value.
struct RunConfig {
  std::string command = "invariants";
  std::uint64_t seed = kDefaultSeed;
  bool quick = false;
  std::string out;

  std::string model = "eguchi-hanson";
  double a = 1.0;
  int dim = 4;
  int gamma = 2;

  std::string orbifold = "hyperbolic";
  double mu = -3.0;
  std::string weyl = "zero";  // "zero", "random" or "list"
  std::vector<double> weyl_entries;  // m^4 components for "list"
  double weyl_scale = 1.0;
  std::optional<int> orbifold_gamma;

  std::vector<double> schedule;  // empty: {8, 16, 32, 64}
  double route_tolerance = kRouteTolerance;
  std::size_t mc_samples = 1000000;

  bool operator==(const RunConfig&) const = default;
};

/// Parses INI text. Throws InvalidArgument on syntax errors or unknown keys.
RunConfig parse_config(const std::string& text);
/// Applies text onto an existing config (flags after a file).
void merge_config(RunConfig& cfg, const std::string& text);
/// Canonical INI text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);
/// Sets "section.key" from text. Throws InvalidArgument for unknown keys or bad values.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);
/// Current value of "section.key" in serialized form; "" for unset optional keys.
std::string get_config_value(const RunConfig& cfg, const std::string& key);
/// All recognised "section.key" names.
std::vector<std::string> config_keys();

/// Semantic checks; throws an input-error code (InvalidParameter, GroupMismatch,
/// DimensionMismatch, PositiveEinsteinConstant) naming the offending key.
void validate_config(const RunConfig& cfg);

std::shared_ptr<const RadialAleModel> make_model(const RunConfig& cfg);
OrbifoldPointData make_orbifold(const RunConfig& cfg);
/// Absolute radii for the model.
std::vector<double> make_schedule(const RunConfig& cfg, const RadialAleModel& model);

}  // namespace alegeo
