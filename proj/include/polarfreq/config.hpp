#pragma once

#include <map>
#include <string>
#include <vector>

#include "polarfreq/dataset.hpp"
#include "polarfreq/evaluation.hpp"
#include "polarfreq/pipeline.hpp"

namespace polarfreq {

/// Parsed "[section]" / "key = value" text. Keys are stored as
/// "section.key"; '#' and ';' start comment lines.
struct IniDocument {
  std::map<std::string, std::string> values;
  std::map<std::string, std::size_t> lines;  // key -> 1-based line
};

/// Throws ParseError (line number) on malformed lines or duplicate keys.
IniDocument parse_ini(const std::string& text);

/// Everything needed to reproduce a run.
struct RunConfig {
  FeatureMode mode = FeatureMode::fbt;
  FBTConfig fbt;
  DFTConfig dft;
  SplitSpec split;

  std::string dataset_path;
  DatasetLayout layout = DatasetLayout::orl;
  bool normalize = false;
  NormalizationConfig normalization;

  std::string out_dir = "out";
  int workers = 1;

  /// error-rate | learning-curve | subject-curve | cmc | roc | feature-map |
  /// synth-oracle
  std::string experiment = "error-rate";
  std::vector<int> k_values{1, 2, 3, 4, 5};
  std::vector<int> subject_counts{5, 10, 15, 20, 25, 30, 35, 40};
  ScoreOrientation score_orientation = ScoreOrientation::distance;
  ScoreSource score_source = ScoreSource::posterior;

  /// Extended coefficient ranges for per-feature maps.
  FBTConfig map_fbt{30, 30, 0.5};
  DFTConfig map_dft{30.0};

  /// Throws ConfigError on inconsistent settings.
  void validate() const;
};

/// Applies the document on top of `base`. Unknown keys are an error.
RunConfig apply_ini(const IniDocument& doc, RunConfig base = {});

/// Canonical resolved form; parse_ini + apply_ini reproduces the config.
std::string to_ini(const RunConfig& config);

/// 64-bit FNV-1a of to_ini() with the output directory and worker count
/// blanked out, 16 hex digits.
std::string config_hash(const RunConfig& config);

}  // namespace polarfreq
