#include "polarfreq/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "polarfreq/error.hpp"
#include "polarfreq/parallel.hpp"
#include "polarfreq/random.hpp"

namespace polarfreq {

void SplitSpec::validate() const {
  if (k_train_per_subject < 1) throw ConfigError("k_train_per_subject must be >= 1");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (n_subjects < 0) throw ConfigError("n_subjects must be >= 0");
}

Split random_split(std::span<const std::string> subject_of, const SplitSpec& spec,
                   int repetition) {
  spec.validate();
  std::map<std::string, std::vector<std::size_t>> by_subject;
  for (std::size_t i = 0; i < subject_of.size(); ++i) {
    by_subject[subject_of[i]].push_back(i);
  }
  if (by_subject.empty()) throw ConfigError("random_split: empty dataset");

  Rng rng(spec.seed ^ static_cast<std::uint64_t>(repetition));
  Split out;
  int kept = 0;
  for (auto& [subject, images] : by_subject) {
    if (spec.n_subjects > 0 && kept == spec.n_subjects) break;
    ++kept;
    const auto k = static_cast<std::size_t>(spec.k_train_per_subject);
    if (images.size() <= k) {
      throw ConfigError("subject '" + subject + "' has " +
                        std::to_string(images.size()) +
                        " images, need more than k = " + std::to_string(k));
    }
    // Partial Fisher-Yates: the first k slots become the training draw.
    for (std::size_t j = 0; j < k; ++j) {
      const auto pick = j + static_cast<std::size_t>(rng.below(images.size() - j));
      std::swap(images[j], images[pick]);
    }
    out.train.insert(out.train.end(), images.begin(), images.begin() + k);
    out.test.insert(out.test.end(), images.begin() + k, images.end());
  }
  if (spec.n_subjects > kept) {
    throw ConfigError("requested " + std::to_string(spec.n_subjects) +
                      " subjects, dataset has " + std::to_string(kept));
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

MeanSem mean_and_sem(std::span<const double> values) {
  MeanSem out;
  if (values.empty()) return out;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() < 2) return out;
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.sem = std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
  return out;
}

ErrorReport run_error_experiment(std::span<const std::string> subject_of,
                                 const Predictor& predictor, const SplitSpec& spec,
                                 int workers) {
  spec.validate();
  ErrorReport out;
  out.per_repetition.assign(static_cast<std::size_t>(spec.repetitions), 0.0);
  parallel_for(out.per_repetition.size(), workers, [&](std::size_t rep) {
    const Split split = random_split(subject_of, spec, static_cast<int>(rep));
    const auto predicted = predictor(split);
    if (predicted.size() != split.test.size()) {
      throw ConfigError("predictor returned " + std::to_string(predicted.size()) +
                        " labels for " + std::to_string(split.test.size()) +
                        " test images");
    }
    std::size_t wrong = 0;
    for (std::size_t t = 0; t < split.test.size(); ++t) {
      if (predicted[t] != subject_of[split.test[t]]) ++wrong;
    }
    out.per_repetition[rep] =
        100.0 * static_cast<double>(wrong) / static_cast<double>(split.test.size());
  });
  const auto stats = mean_and_sem(out.per_repetition);
  out.mean = stats.mean;
  out.sem = stats.sem;
  return out;
}

CMCCurve cmc(std::span<const ClassScores> scores,
             std::span<const std::string> true_subjects) {
  if (scores.size() != true_subjects.size()) {
    throw ConfigError("cmc: one true subject per probe is required");
  }
  if (scores.empty()) throw ConfigError("cmc: no probes");
  const std::size_t classes = scores.front().labels.size();
  std::vector<std::size_t> hits(classes + 1, 0);
  for (std::size_t p = 0; p < scores.size(); ++p) {
    const auto& s = scores[p];
    const auto it = std::find(s.labels.begin(), s.labels.end(), true_subjects[p]);
    if (it == s.labels.end()) {
      throw ConfigError("cmc: probe subject '" + true_subjects[p] +
                        "' is not in the gallery");
    }
    const double truth = s.normalized[static_cast<std::size_t>(it - s.labels.begin())];
    std::size_t rank = 0;
    for (double v : s.normalized) {
      if (v >= truth) ++rank;
    }
    ++hits[rank];
  }
  CMCCurve out;
  std::size_t cumulative = 0;
  for (std::size_t r = 1; r <= classes; ++r) {
    cumulative += hits[r];
    out.rank.push_back(static_cast<int>(r));
    out.proportion_correct.push_back(static_cast<double>(cumulative) /
                                     static_cast<double>(scores.size()));
  }
  return out;
}

ScoreOrientation parse_score_orientation(const std::string& text) {
  if (text == "distance") return ScoreOrientation::distance;
  if (text == "similarity") return ScoreOrientation::similarity;
  throw ConfigError("unknown score orientation '" + text + "'");
}

std::string to_string(ScoreOrientation orientation) {
  return orientation == ScoreOrientation::distance ? "distance" : "similarity";
}

VerificationScores verification_scores(std::span<const ClassScores> scores,
                                       std::span<const std::string> true_subjects,
                                       ScoreOrientation orientation) {
  if (scores.size() != true_subjects.size()) {
    throw ConfigError("verification_scores: one true subject per probe is required");
  }
  VerificationScores out;
  for (std::size_t p = 0; p < scores.size(); ++p) {
    const auto& s = scores[p];
    for (std::size_t c = 0; c < s.labels.size(); ++c) {
      const double value = orientation == ScoreOrientation::distance
                               ? 1.0 - s.normalized[c]
                               : s.normalized[c];
      (s.labels[c] == true_subjects[p] ? out.genuine : out.impostor).push_back(value);
    }
  }
  return out;
}

ROCCurve verification_roc(std::span<const double> genuine,
                          std::span<const double> impostor,
                          ScoreOrientation orientation, int levels) {
  if (genuine.empty() || impostor.empty()) {
    throw ConfigError("verification_roc: genuine and impostor sets must be nonempty");
  }
  if (levels < 2) throw ConfigError("verification_roc: need at least 2 levels");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : genuine) lo = std::min(lo, v), hi = std::max(hi, v);
  for (double v : impostor) lo = std::min(lo, v), hi = std::max(hi, v);

  const bool distance = orientation == ScoreOrientation::distance;
  auto accepted = [&](std::span<const double> set, double c) {
    std::size_t count = 0;
    for (double v : set) {
      if (distance ? v <= c : v >= c) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(set.size());
  };

  ROCCurve out;
  out.orientation = orientation;
  for (int k = 0; k < levels; ++k) {
    const double t = k == levels - 1 ? hi : lo + (hi - lo) * k / (levels - 1);
    out.thresholds.push_back(t);
  }
  if (!distance) std::reverse(out.thresholds.begin(), out.thresholds.end());
  for (double t : out.thresholds) {
    out.verification.push_back(accepted(genuine, t));
    out.false_alarm.push_back(accepted(impostor, t));
  }
  return out;
}

EqualErrorRate equal_error_rate(const ROCCurve& roc) {
  if (roc.thresholds.empty()) throw ConfigError("equal_error_rate: empty ROC");
  auto gap = [&](std::size_t k) {
    return (1.0 - roc.verification[k]) - roc.false_alarm[k];
  };
  EqualErrorRate out;
  double best = std::abs(gap(0));
  for (std::size_t k = 1; k < roc.thresholds.size(); ++k) {
    if (std::abs(gap(k)) < best) {
      best = std::abs(gap(k));
      out.index = k;
    }
  }
  out.threshold = roc.thresholds[out.index];
  out.rate = 0.5 * ((1.0 - roc.verification[out.index]) + roc.false_alarm[out.index]);
  out.bracket_low = out.bracket_high = out.threshold;
  for (std::size_t k = 0; k + 1 < roc.thresholds.size(); ++k) {
    if (gap(k) > 0.0 && gap(k + 1) <= 0.0) {
      out.bracket_low = roc.thresholds[k];
      out.bracket_high = roc.thresholds[k + 1];
      break;
    }
  }
  return out;
}

std::vector<double> per_feature_error_rates(std::span<const FeatureVector> features,
                                            std::span<const std::string> subject_of,
                                            const SplitSpec& spec, int workers) {
  if (features.empty() || features.size() != subject_of.size()) {
    throw ConfigError("per_feature_error_rates: one subject per feature vector");
  }
  const std::size_t dims = features.front().size();
  for (const auto& f : features) {
    if (f.layout_id != features.front().layout_id || f.size() != dims) {
      throw ConfigError("per_feature_error_rates: mixed feature layouts");
    }
  }

  std::vector<double> totals(dims, 0.0);
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    const Split split = random_split(subject_of, spec, rep);
    std::vector<double> errors(dims, 0.0);
    parallel_for(dims, workers, [&](std::size_t f) {
      std::size_t wrong = 0;
      for (std::size_t t : split.test) {
        const double x = features[t].values[f];
        std::size_t best = split.train.front();
        double best_distance = std::numeric_limits<double>::infinity();
        for (std::size_t j : split.train) {
          const double d = std::abs(features[j].values[f] - x);
          if (d < best_distance) {
            best_distance = d;
            best = j;
          }
        }
        if (subject_of[best] != subject_of[t]) ++wrong;
      }
      errors[f] = 100.0 * static_cast<double>(wrong) /
                  static_cast<double>(split.test.size());
    });
    for (std::size_t f = 0; f < dims; ++f) totals[f] += errors[f];
  }
  for (auto& v : totals) v /= spec.repetitions;
  return totals;
}

FeatureMap arrange_feature_map(const std::string& layout_id,
                               std::span<const double> per_feature) {
  FeatureMap out;
  int max_order = -1;
  int max_root = 0;
  char tail = 0;
  if (std::sscanf(layout_id.c_str(), "fbt-%dx%d%c", &max_order, &max_root, &tail) == 2) {
    out.rows = 2 * (max_order + 1);
    out.cols = max_root;
    if (per_feature.size() != static_cast<std::size_t>(out.rows) * out.cols) {
      throw ConfigError("feature map: length does not match " + layout_id);
    }
    out.values.assign(per_feature.begin(), per_feature.end());
    for (const char* block : {"A", "B"}) {
      for (int n = 0; n <= max_order; ++n) {
        out.row_labels.push_back(std::string(block) + std::to_string(n));
      }
    }
    for (int i = 1; i <= max_root; ++i) out.col_labels.push_back("root" + std::to_string(i));
    return out;
  }

  if (layout_id.rfind("dft-", 0) == 0) {
    const double max_cycles = std::stod(layout_id.substr(4));
    const auto pairs = dft_selection(max_cycles);
    if (pairs.size() != per_feature.size()) {
      throw ConfigError("feature map: length does not match " + layout_id);
    }
    const int reach = static_cast<int>(std::floor(max_cycles));
    out.rows = out.cols = 2 * reach + 1;
    out.values.assign(static_cast<std::size_t>(out.rows) * out.cols,
                      std::numeric_limits<double>::quiet_NaN());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      out.values[static_cast<std::size_t>(pairs[k].v + reach) * out.cols +
                 (pairs[k].u + reach)] = per_feature[k];
    }
    for (int v = -reach; v <= reach; ++v) out.row_labels.push_back("v" + std::to_string(v));
    for (int u = -reach; u <= reach; ++u) out.col_labels.push_back("u" + std::to_string(u));
    return out;
  }
  throw ConfigError("feature map: unknown layout '" + layout_id + "'");
}

FeatureMap per_feature_error_map(std::span<const FeatureVector> features,
                                 std::span<const std::string> subject_of,
                                 const SplitSpec& spec, int workers) {
  const auto rates = per_feature_error_rates(features, subject_of, spec, workers);
  return arrange_feature_map(features.front().layout_id, rates);
}

}  // namespace polarfreq
