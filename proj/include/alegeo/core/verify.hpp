#pragma once

#include "alegeo/core/tensor.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace alegeo {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct PropertyResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=", ">=" or "=="
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  bool quick = false;
  std::size_t mc_samples = 1000000;
  /// Closed-form sphere moments under test; replaceable to check that the suite
  /// catches a corrupted formula.
  std::function<Tensor4(int)> sphere_moments;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
  std::vector<std::string> failed() const;
  /// Fixed-width pass/fail table.
  std::string table() const;
};

VerifyReport run_verification(const VerifyOptions& options);

/// Largest |closed - MC| / (standard error) over distinct index patterns.
struct MomentComparison {
  int dim = 0;
  std::size_t patterns = 0;
  double max_sigma = 0.0;
  bool passed = false;
};
MomentComparison compare_sphere_moments(int m, const Tensor4& closed_form, std::size_t samples,
                                        std::mt19937_64& rng);

}  // namespace alegeo
