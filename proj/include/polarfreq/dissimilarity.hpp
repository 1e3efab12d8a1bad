#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polarfreq/features.hpp"

namespace polarfreq {

/// Pairwise Euclidean distances between training images. Row/column i is
/// image ids[i]; each image is represented by its column.
struct DissimilarityMatrix {
  std::vector<std::string> ids;
  Eigen::MatrixXd values;

  Eigen::Index size() const noexcept { return values.rows(); }
};

/// Throws ConfigError when the two layouts (or lengths) differ.
double euclidean_distance(const FeatureVector& a, const FeatureVector& b);

/// Throws ConfigError on mixed layouts. `ids` may be empty, otherwise it
/// must have one entry per feature vector.
DissimilarityMatrix dissimilarity_matrix(std::span<const FeatureVector> features,
                                         std::vector<std::string> ids = {});

/// Distances from the probe to every gallery vector, in gallery order.
Eigen::VectorXd embed_probe(const FeatureVector& probe,
                            std::span<const FeatureVector> gallery);

}  // namespace polarfreq
