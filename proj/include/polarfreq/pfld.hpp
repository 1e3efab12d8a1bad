#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polarfreq/dissimilarity.hpp"
#include "polarfreq/features.hpp"

namespace polarfreq {

/// Moore-Penrose pseudoinverse from the SVD. Singular values at or below
/// relative_cutoff * sigma_max are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a,
                               double relative_cutoff = 1e-10);

/// One-vs-rest minimum-square-error discriminants in dissimilarity space.
///
/// Rows of D are centered by the column mean, augmented with a constant 1,
/// and for each class c the weights solve [D_c | 1] w = y in the
/// minimum-norm least-squares sense, y_i = +1 for images of c and -1
/// otherwise. weights.col(c) has length n + 1, the bias last.
struct PfldSolution {
  Eigen::RowVectorXd mean_offset;
  Eigen::MatrixXd weights;
  std::vector<std::string> class_labels;  // sorted, unique
};

/// Throws ConfigError for fewer than two classes or a label count that
/// differs from D's size.
PfldSolution solve_pfld(const Eigen::MatrixXd& dissimilarities,
                        std::span<const std::string> subject_of);

/// Per-class scores for one probe. `normalized` holds the logistic of each
/// raw discriminant divided by their sum.
struct ClassScores {
  std::vector<std::string> labels;
  std::vector<double> raw;
  std::vector<double> normalized;

  /// Index of the highest normalized score; ties go to the lowest index.
  std::size_t best() const;
  const std::string& predicted() const { return labels[best()]; }
};

ClassScores normalize_scores(std::vector<std::string> labels,
                             std::vector<double> raw);

class TrainedModel {
public:
  TrainedModel(std::vector<FeatureVector> gallery, PfldSolution solution);

  const std::string& layout_id() const { return gallery_.front().layout_id; }
  const std::vector<FeatureVector>& gallery() const noexcept { return gallery_; }
  const Eigen::RowVectorXd& mean_offset() const noexcept { return solution_.mean_offset; }
  const Eigen::MatrixXd& weights() const noexcept { return solution_.weights; }
  const std::vector<std::string>& class_labels() const noexcept {
    return solution_.class_labels;
  }

  /// Raw outputs g_c for a probe embedding (distances to the gallery).
  Eigen::VectorXd discriminants(const Eigen::VectorXd& embedding) const;

private:
  std::vector<FeatureVector> gallery_;
  PfldSolution solution_;
};

TrainedModel train_pfld(std::vector<FeatureVector> gallery,
                        std::span<const std::string> subject_of);
TrainedModel train_pfld(const DissimilarityMatrix& dissimilarities,
                        std::span<const std::string> subject_of,
                        std::vector<FeatureVector> gallery);

/// Throws ConfigError on a layout mismatch with the model gallery.
ClassScores classify(const TrainedModel& model, const FeatureVector& probe);

/// Per-class maximum of the two normalized score vectors. Throws
/// ConfigError when the label sets differ.
ClassScores fuse_scores(const ClassScores& a, const ClassScores& b);

/// argmax of fuse_scores; ties go to the lower class index.
std::string fuse_max(const ClassScores& a, const ClassScores& b);

/// 1-D nearest neighbour on a single coefficient; ties go to the lowest
/// training index. Throws InputDomainError for an out-of-range index.
std::string nearest_neighbor_single_feature(std::span<const FeatureVector> train,
                                            std::span<const std::string> labels,
                                            const FeatureVector& probe,
                                            std::size_t feature_index);

}  // namespace polarfreq
