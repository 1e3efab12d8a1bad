#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polarfreq/features.hpp"
#include "polarfreq/pfld.hpp"

namespace polarfreq {

// ---------------------------------------------------------------------------
// Repeated random splits
// ---------------------------------------------------------------------------

struct SplitSpec {
  int k_train_per_subject = 5;
  /// Keep only the first n subjects in id order; 0 keeps all.
  int n_subjects = 0;
  int repetitions = 10;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Indices into the dataset, each ascending.
struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Draws k images per subject without replacement into the training set;
/// the rest of that subject's images form the test set. The stream for a
/// repetition is seeded with seed ^ repetition. Throws ConfigError when a
/// subject has no more than k images.
Split random_split(std::span<const std::string> subject_of, const SplitSpec& spec,
                   int repetition);

struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;
};

/// Mean and standard error (sample stddev / sqrt(n)); sem is 0 for n < 2.
MeanSem mean_and_sem(std::span<const double> values);

/// Predicts a subject for every split.test entry, in that order.
using Predictor = std::function<std::vector<std::string>(const Split&)>;

struct ErrorReport {
  std::vector<double> per_repetition;  // percent misclassified
  double mean = 0.0;
  double sem = 0.0;
};

ErrorReport run_error_experiment(std::span<const std::string> subject_of,
                                 const Predictor& predictor, const SplitSpec& spec,
                                 int workers = 1);

// ---------------------------------------------------------------------------
// Identification (CMC)
// ---------------------------------------------------------------------------

struct CMCCurve {
  std::vector<int> rank;                 // 1..G
  std::vector<double> proportion_correct;
};

/// Rank of the true class under descending normalized score; tied classes
/// all take the worst rank of their group. Throws ConfigError when a true
/// subject is not among the labels.
CMCCurve cmc(std::span<const ClassScores> scores,
             std::span<const std::string> true_subjects);

// ---------------------------------------------------------------------------
// Verification (ROC / EER)
// ---------------------------------------------------------------------------

/// distance: a claim is confirmed when score <= c.
/// similarity: a claim is confirmed when score >= c.
enum class ScoreOrientation { distance, similarity };

ScoreOrientation parse_score_orientation(const std::string& text);
std::string to_string(ScoreOrientation orientation);

struct VerificationScores {
  std::vector<double> genuine;   // claims p ~ g
  std::vector<double> impostor;  // claims p != g
};

/// One claim per (probe, class). With distance orientation the score is
/// 1 - normalized posterior, with similarity the posterior itself.
VerificationScores verification_scores(std::span<const ClassScores> scores,
                                       std::span<const std::string> true_subjects,
                                       ScoreOrientation orientation);

struct ROCCurve {
  ScoreOrientation orientation = ScoreOrientation::distance;
  /// Ordered so that acceptance grows along the curve (ascending for
  /// distance scores, descending for similarity scores).
  std::vector<double> thresholds;
  std::vector<double> verification;  // P_V
  std::vector<double> false_alarm;   // P_F
};

/// `levels` equally spaced thresholds spanning the observed score range.
/// Throws ConfigError if either subset is empty.
ROCCurve verification_roc(std::span<const double> genuine,
                          std::span<const double> impostor,
                          ScoreOrientation orientation = ScoreOrientation::distance,
                          int levels = 100);

struct EqualErrorRate {
  double rate = 0.0;       // mean of (1 - P_V) and P_F at the chosen level
  double threshold = 0.0;
  std::size_t index = 0;
  /// Adjacent thresholds between which (1 - P_V) - P_F changes sign; both
  /// equal `threshold` when no sign change is observed.
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

/// Level minimizing |(1 - P_V) - P_F|; ties go to the lowest index.
EqualErrorRate equal_error_rate(const ROCCurve& roc);

// ---------------------------------------------------------------------------
// Single-feature maps
// ---------------------------------------------------------------------------

/// Mean (over repetitions) percent error of 1-D nearest-neighbour
/// classification on each coefficient separately.
std::vector<double> per_feature_error_rates(std::span<const FeatureVector> features,
                                            std::span<const std::string> subject_of,
                                            const SplitSpec& spec, int workers = 1);

/// Error rates arranged in spectrum layout. FBT: rows are A_0..A_N then
/// B_0..B_N, columns roots 1..I. DFT: the centered (2K+1)^2 frequency
/// plane, row v + K, column u + K, NaN outside the selection disk.
struct FeatureMap {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  double at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * cols + col];
  }
};

FeatureMap arrange_feature_map(const std::string& layout_id,
                               std::span<const double> per_feature);

FeatureMap per_feature_error_map(std::span<const FeatureVector> features,
                                 std::span<const std::string> subject_of,
                                 const SplitSpec& spec, int workers = 1);

}  // namespace polarfreq
