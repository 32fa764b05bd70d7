#pragma once

#include <cstdint>
#include <string>

#include "vqn/analysis.hpp"
#include "vqn/automorphism.hpp"
#include "vqn/topology.hpp"

namespace vqn {

// Resource caps and sampling knobs, loadable from a JSON config file.
// Precedence is handled by the CLI: flags > file > these defaults.
struct CliConfig {
  int size_cap = kDefaultSizeCap;
  int exhaustive_cap = kDefaultExhaustiveCap;
  int cycle_length_cap = kDefaultCycleLengthCap;
  int sample_count = kDefaultSampleCount;
  std::uint64_t seed = 0;

  // Throws on non-positive caps or exhaustive_cap > size_cap.
  void validate() const;

  // Strict parse: unknown keys are rejected.
  static CliConfig from_json_text(const std::string& text);
  static CliConfig from_json_file(const std::string& path);
};

}  // namespace vqn
