#include "polarfreq/dissimilarity.hpp"

#include <cmath>

#include "polarfreq/error.hpp"

namespace polarfreq {

namespace {

void check_compatible(const FeatureVector& a, const FeatureVector& b) {
  if (a.layout_id != b.layout_id) {
    throw ConfigError("feature layout mismatch: '" + a.layout_id + "' vs '" +
                      b.layout_id + "'");
  }
  if (a.size() != b.size()) {
    throw ConfigError("feature length mismatch within layout '" + a.layout_id + "'");
  }
}

}  // namespace

double euclidean_distance(const FeatureVector& a, const FeatureVector& b) {
  check_compatible(a, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a.values[k] - b.values[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DissimilarityMatrix dissimilarity_matrix(std::span<const FeatureVector> features,
                                         std::vector<std::string> ids) {
  if (!ids.empty() && ids.size() != features.size()) {
    throw ConfigError("dissimilarity_matrix: id count does not match features");
  }
  const auto n = static_cast<Eigen::Index>(features.size());
  DissimilarityMatrix out;
  out.ids = std::move(ids);
  out.values = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = euclidean_distance(features[i], features[j]);
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

Eigen::VectorXd embed_probe(const FeatureVector& probe,
                            std::span<const FeatureVector> gallery) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(gallery.size()));
  for (std::size_t j = 0; j < gallery.size(); ++j) {
    out(static_cast<Eigen::Index>(j)) = euclidean_distance(probe, gallery[j]);
  }
  return out;
}

}  // namespace polarfreq
