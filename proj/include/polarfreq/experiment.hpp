#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "polarfreq/config.hpp"
#include "polarfreq/dataset.hpp"

namespace polarfreq {

struct ReportFile {
  std::string name;      // file name inside the run directory
  std::string contents;
};

struct ExperimentResult {
  std::vector<ReportFile> files;
  /// Human-readable one-liners, one per experiment or check.
  std::vector<std::string> summary_lines;
  /// False only when a synth-oracle check fails.
  bool passed = true;
};

struct OracleCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
};

/// Transforms the radial-8, angular-4 and averaged patterns (size x size,
/// config resolution) and checks where the dominant coefficients land.
std::vector<OracleCheck> run_synth_oracle(int size = 131,
                                          const FBTConfig& config = {30, 10, 0.5});

/// Runs config.experiment. `dataset` may be null only for synth-oracle.
ExperimentResult run_experiment(const RunConfig& config, const Dataset* dataset);

/// Writes every report file plus run_config.ini into config.out_dir, each
/// through a temporary file. Returns the written paths.
std::vector<std::filesystem::path> write_experiment(const RunConfig& config,
                                                    const ExperimentResult& result);

}  // namespace polarfreq
