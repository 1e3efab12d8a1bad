#include "polarfreq/normalize.hpp"

#include <complex>

#include "polarfreq/error.hpp"
#include "polarfreq/polar.hpp"

namespace polarfreq {

bool EllipseMask::contains(double x, double y) const {
  const double dx = (x - center.x) / semi_x;
  const double dy = (y - center.y) / semi_y;
  return dx * dx + dy * dy <= 1.0;
}

void NormalizationConfig::validate() const {
  if (crop_width < 2 || crop_height < 2) throw ConfigError("crop must be at least 2x2");
  auto inside = [&](Point2 p) {
    return p.x >= 0.0 && p.y >= 0.0 && p.x <= crop_width - 1 && p.y <= crop_height - 1;
  };
  if (!inside(target_left) || !inside(target_right)) {
    throw ConfigError("eye targets must lie inside the crop");
  }
  if (target_left == target_right) throw ConfigError("eye targets coincide");
  if (!(mask.semi_x > 0.0) || !(mask.semi_y > 0.0)) {
    throw ConfigError("mask semi-axes must be positive");
  }
}

Point2 SimilarityTransform::apply(Point2 p) const {
  return {a * p.x - b * p.y + tx, b * p.x + a * p.y + ty};
}

SimilarityTransform SimilarityTransform::inverse() const {
  const std::complex<double> s(a, b);
  const std::complex<double> t(tx, ty);
  const auto si = 1.0 / s;
  const auto ti = -si * t;
  return {si.real(), si.imag(), ti.real(), ti.imag()};
}

SimilarityTransform similarity_from_eyes(const EyePair& from, const EyePair& to) {
  const std::complex<double> fl(from.left.x, from.left.y);
  const std::complex<double> fr(from.right.x, from.right.y);
  const std::complex<double> tl(to.left.x, to.left.y);
  const std::complex<double> tr(to.right.x, to.right.y);
  if (fl == fr) throw GeometryError("eye positions coincide");
  if (tl == tr) throw GeometryError("target eye positions coincide");
  const auto s = (tr - tl) / (fr - fl);
  const auto t = tl - s * fl;
  return {s.real(), s.imag(), t.real(), t.imag()};
}

GrayImage normalize_face(const GrayImage& image, const EyePair& eyes,
                         const NormalizationConfig& config) {
  config.validate();
  const auto to_source =
      similarity_from_eyes(eyes, {config.target_left, config.target_right}).inverse();

  GrayImage out(config.crop_width, config.crop_height);
  for (int y = 0; y < config.crop_height; ++y) {
    for (int x = 0; x < config.crop_width; ++x) {
      if (config.apply_mask && !config.mask.contains(x, y)) continue;
      const Point2 src = to_source.apply({static_cast<double>(x), static_cast<double>(y)});
      out.at(x, y) = bilinear_sample(image, src.x, src.y);
    }
  }
  return out;
}

}  // namespace polarfreq
