#pragma once

#include "alegeo/core/config.hpp"
#include "alegeo/core/verify.hpp"

#include <string>
#include <vector>

namespace alegeo {

inline constexpr int kSchemaVersion = 1;

struct CsvTable {
  std::string name;  // file stem suffix, e.g. "renormalized_volume"
  std::string csv;
};

struct CommandResult {
  std::string command;
  std::string json;  // floats printed with 17 significant digits
  std::vector<CsvTable> tables;
  std::string summary;  // human-readable
  int exit_status = 0;  // 0, or 1 when verification fails
};

/// Invariants of the configured model by both volume routes, plus the Poisson data.
CommandResult run_invariants(const RunConfig& cfg);
/// Full obstruction pipeline for the configured model and orbifold data.
CommandResult run_obstruction(const RunConfig& cfg);
/// Property suite. `overrides` may replace the sphere-moment formula under test.
CommandResult run_verify(const RunConfig& cfg, const VerifyOptions* overrides = nullptr);
/// Validates the config and dispatches on cfg.command. Throws Error.
CommandResult run_command(const RunConfig& cfg);

}  // namespace alegeo
