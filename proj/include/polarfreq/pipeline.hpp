#pragma once

#include <span>
#include <string>
#include <vector>

#include "polarfreq/dataset.hpp"
#include "polarfreq/evaluation.hpp"
#include "polarfreq/feature_io.hpp"
#include "polarfreq/features.hpp"
#include "polarfreq/normalize.hpp"

namespace polarfreq {

/// The three recognizers: FBT only, DFT only, both fused by the max rule.
enum class FeatureMode { fbt, dft, fused };

FeatureMode parse_feature_mode(const std::string& text);
std::string to_string(FeatureMode mode);

struct ExtractionOptions {
  FeatureMode mode = FeatureMode::fbt;
  FBTConfig fbt;
  DFTConfig dft;
  bool normalize = false;
  NormalizationConfig normalization;
  int workers = 1;
};

/// Per-image descriptors in dataset order. `fbt` / `dft` are empty when
/// the mode does not use them.
struct FeatureSet {
  std::vector<std::string> image_ids;
  std::vector<std::string> subject_ids;
  std::vector<FeatureVector> fbt;
  std::vector<FeatureVector> dft;

  std::size_t size() const noexcept { return image_ids.size(); }
  /// Rows for a feature file; `which` must be fbt or dft.
  std::vector<FeatureRecord> records(FeatureMode which) const;
};

/// Loads, optionally normalizes (requires eye annotations), and extracts
/// the descriptors the mode needs. Images run in parallel; the output
/// order is the dataset order regardless of worker count.
FeatureSet extract_features(const Dataset& dataset, const ExtractionOptions& options);

/// Builds a FeatureSet from feature-file rows (one or two files).
FeatureSet feature_set_from_records(std::span<const FeatureRecord> fbt,
                                    std::span<const FeatureRecord> dft);

/// Trains one PFLD per active feature type on split.train and scores every
/// split.test image. Fused mode combines the two with the max rule.
std::vector<ClassScores> score_split(const FeatureSet& features, FeatureMode mode,
                                     const Split& split);

Predictor make_pfld_predictor(const FeatureSet& features, FeatureMode mode);

/// Where verification claim scores come from.
enum class ScoreSource {
  posterior,           // 1 - normalized posterior (or the posterior itself)
  embedding_distance,  // closest gallery image of the claimed subject
};

ScoreSource parse_score_source(const std::string& text);
std::string to_string(ScoreSource source);

/// Genuine / impostor claim scores for one split: one claim per
/// (test image, gallery subject).
VerificationScores split_claims(const FeatureSet& features, FeatureMode mode,
                                const Split& split, ScoreSource source,
                                ScoreOrientation orientation);

}  // namespace polarfreq
