#pragma once

#include "polarfreq/image.hpp"

namespace polarfreq {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct EyePair {
  Point2 left;
  Point2 right;
  friend bool operator==(const EyePair&, const EyePair&) = default;
};

struct EllipseMask {
  Point2 center{58.5, 70.0};
  double semi_x = 56.0;
  double semi_y = 68.0;

  bool contains(double x, double y) const;
};

/// Geometric registration of a face. The defaults are project conventions
/// (eyes symmetric about the crop's vertical axis, ellipse inscribed in the
/// crop), not values taken from any published protocol.
struct NormalizationConfig {
  Point2 target_left{29.0, 47.0};
  Point2 target_right{88.0, 47.0};
  int crop_width = 118;
  int crop_height = 140;
  EllipseMask mask;
  bool apply_mask = true;

  /// Throws ConfigError if the targets fall outside the crop, coincide,
  /// or the mask semi-axes are not positive.
  void validate() const;
};

/// x' = a x - b y + tx, y' = b x + a y + ty (rotation + uniform scale +
/// translation).
struct SimilarityTransform {
  double a = 1.0;
  double b = 0.0;
  double tx = 0.0;
  double ty = 0.0;

  Point2 apply(Point2 p) const;
  SimilarityTransform inverse() const;
};

/// The unique similarity mapping from.left -> to.left and from.right ->
/// to.right. Throws GeometryError when from.left == from.right.
SimilarityTransform similarity_from_eyes(const EyePair& from, const EyePair& to);

/// Registers the eyes onto the configured targets with bilinear
/// resampling, crops to crop_width x crop_height and zeroes everything
/// outside the elliptical mask. Samples falling outside the source image
/// are 0. No photometric normalization is applied.
GrayImage normalize_face(const GrayImage& image, const EyePair& eyes,
                         const NormalizationConfig& config = {});

}  // namespace polarfreq
