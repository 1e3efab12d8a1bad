#include "polarfreq/pfld.hpp"

#include <algorithm>
#include <cmath>

#include "polarfreq/error.hpp"

namespace polarfreq {

namespace {

double logistic(double g) {
  if (g >= 0.0) return 1.0 / (1.0 + std::exp(-g));
  const double e = std::exp(g);
  return e / (1.0 + e);
}

}  // namespace

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double relative_cutoff) {
  if (a.size() == 0) return Eigen::MatrixXd::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double cutoff = relative_cutoff * sigma(0);
  Eigen::VectorXd inverted = Eigen::VectorXd::Zero(sigma.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cutoff) inverted(k) = 1.0 / sigma(k);
  }
  return svd.matrixV() * inverted.asDiagonal() * svd.matrixU().transpose();
}

PfldSolution solve_pfld(const Eigen::MatrixXd& dissimilarities,
                        std::span<const std::string> subject_of) {
  const Eigen::Index n = dissimilarities.rows();
  if (dissimilarities.cols() != n || static_cast<std::size_t>(n) != subject_of.size()) {
    throw ConfigError("solve_pfld: need a square matrix with one label per image");
  }

  PfldSolution out;
  out.class_labels.assign(subject_of.begin(), subject_of.end());
  std::sort(out.class_labels.begin(), out.class_labels.end());
  out.class_labels.erase(std::unique(out.class_labels.begin(), out.class_labels.end()),
                         out.class_labels.end());
  if (out.class_labels.size() < 2) {
    throw ConfigError("solve_pfld: at least two classes are required");
  }

  out.mean_offset = dissimilarities.colwise().mean();
  Eigen::MatrixXd augmented(n, n + 1);
  augmented.leftCols(n) = dissimilarities.rowwise() - out.mean_offset;
  augmented.col(n).setOnes();

  const auto classes = static_cast<Eigen::Index>(out.class_labels.size());
  Eigen::MatrixXd targets = Eigen::MatrixXd::Constant(n, classes, -1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto it = std::lower_bound(out.class_labels.begin(), out.class_labels.end(),
                                     subject_of[static_cast<std::size_t>(i)]);
    targets(i, it - out.class_labels.begin()) = 1.0;
  }

  out.weights = pseudo_inverse(augmented) * targets;
  return out;
}

std::size_t ClassScores::best() const {
  std::size_t best = 0;
  for (std::size_t c = 1; c < normalized.size(); ++c) {
    if (normalized[c] > normalized[best]) best = c;
  }
  return best;
}

ClassScores normalize_scores(std::vector<std::string> labels, std::vector<double> raw) {
  ClassScores out;
  out.labels = std::move(labels);
  out.raw = std::move(raw);
  out.normalized.resize(out.raw.size());
  double total = 0.0;
  for (std::size_t c = 0; c < out.raw.size(); ++c) {
    out.normalized[c] = logistic(out.raw[c]);
    total += out.normalized[c];
  }
  if (total > 0.0) {
    for (auto& v : out.normalized) v /= total;
  } else if (!out.normalized.empty()) {
    std::fill(out.normalized.begin(), out.normalized.end(),
              1.0 / static_cast<double>(out.normalized.size()));
  }
  return out;
}

TrainedModel::TrainedModel(std::vector<FeatureVector> gallery, PfldSolution solution)
    : gallery_(std::move(gallery)), solution_(std::move(solution)) {
  const auto n = static_cast<Eigen::Index>(gallery_.size());
  if (n == 0) throw ConfigError("trained model needs a nonempty gallery");
  if (solution_.mean_offset.size() != n || solution_.weights.rows() != n + 1 ||
      solution_.weights.cols() != static_cast<Eigen::Index>(solution_.class_labels.size())) {
    throw ConfigError("trained model dimensions are inconsistent");
  }
}

Eigen::VectorXd TrainedModel::discriminants(const Eigen::VectorXd& embedding) const {
  const Eigen::Index n = static_cast<Eigen::Index>(gallery_.size());
  if (embedding.size() != n) {
    throw ConfigError("probe embedding length does not match the gallery");
  }
  Eigen::RowVectorXd augmented(n + 1);
  augmented.head(n) = embedding.transpose() - solution_.mean_offset;
  augmented(n) = 1.0;
  return (augmented * solution_.weights).transpose();
}

TrainedModel train_pfld(std::vector<FeatureVector> gallery,
                        std::span<const std::string> subject_of) {
  const auto d = dissimilarity_matrix(gallery);
  return TrainedModel(std::move(gallery), solve_pfld(d.values, subject_of));
}

TrainedModel train_pfld(const DissimilarityMatrix& dissimilarities,
                        std::span<const std::string> subject_of,
                        std::vector<FeatureVector> gallery) {
  if (dissimilarities.size() != static_cast<Eigen::Index>(gallery.size())) {
    throw ConfigError("train_pfld: gallery size does not match the matrix");
  }
  return TrainedModel(std::move(gallery), solve_pfld(dissimilarities.values, subject_of));
}

ClassScores classify(const TrainedModel& model, const FeatureVector& probe) {
  const Eigen::VectorXd g = model.discriminants(embed_probe(probe, model.gallery()));
  return normalize_scores(model.class_labels(),
                          std::vector<double>(g.data(), g.data() + g.size()));
}

ClassScores fuse_scores(const ClassScores& a, const ClassScores& b) {
  if (a.labels != b.labels) {
    throw ConfigError("fuse_max: classifiers disagree on the class label set");
  }
  ClassScores out;
  out.labels = a.labels;
  out.raw.resize(a.raw.size());
  out.normalized.resize(a.normalized.size());
  for (std::size_t c = 0; c < a.normalized.size(); ++c) {
    out.normalized[c] = std::max(a.normalized[c], b.normalized[c]);
    out.raw[c] = std::max(a.raw[c], b.raw[c]);
  }
  return out;
}

std::string fuse_max(const ClassScores& a, const ClassScores& b) {
  return fuse_scores(a, b).predicted();
}

std::string nearest_neighbor_single_feature(std::span<const FeatureVector> train,
                                            std::span<const std::string> labels,
                                            const FeatureVector& probe,
                                            std::size_t feature_index) {
  if (train.empty() || train.size() != labels.size()) {
    throw ConfigError("nearest neighbour needs one label per training vector");
  }
  if (feature_index >= probe.size()) {
    throw InputDomainError("feature index " + std::to_string(feature_index) +
                           " out of range");
  }
  const double x = probe.values[feature_index];
  std::size_t best = 0;
  double best_distance = INFINITY;
  for (std::size_t j = 0; j < train.size(); ++j) {
    if (train[j].layout_id != probe.layout_id || feature_index >= train[j].size()) {
      throw ConfigError("nearest neighbour: layout mismatch");
    }
    const double d = std::abs(train[j].values[feature_index] - x);
    if (d < best_distance) {
      best_distance = d;
      best = j;
    }
  }
  return labels[best];
}

}  // namespace polarfreq
