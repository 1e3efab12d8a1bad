#include "polarfreq/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "polarfreq/error.hpp"

namespace polarfreq {

double PolarGrid::delta_theta() const {
  return angular_resolution_deg * std::numbers::pi / 180.0;
}

double bilinear_sample(const GrayImage& image, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InputDomainError("bilinear_sample: non-finite coordinate");
  }
  const int w = image.width();
  const int h = image.height();
  if (x < 0.0 || y < 0.0 || x > w - 1 || y > h - 1) return 0.0;

  // Clamp so that the right/bottom edge reuses the last cell with weight 1.
  const int x0 = std::min(static_cast<int>(x), w - 2);
  const int y0 = std::min(static_cast<int>(y), h - 2);
  const double fx = x - x0;
  const double fy = y - y0;

  const double top = (1.0 - fx) * image.at(x0, y0) + fx * image.at(x0 + 1, y0);
  const double bottom =
      (1.0 - fx) * image.at(x0, y0 + 1) + fx * image.at(x0 + 1, y0 + 1);
  return (1.0 - fy) * top + fy * bottom;
}

int rays_for_resolution(double angular_resolution_deg) {
  if (!(angular_resolution_deg > 0.0) || !std::isfinite(angular_resolution_deg)) {
    throw ConfigError("angular resolution must be positive");
  }
  const double count = 360.0 / angular_resolution_deg;
  const double rounded = std::round(count);
  if (std::abs(count - rounded) > 1e-9 * std::max(1.0, count)) {
    throw ConfigError("360 is not a multiple of the angular resolution " +
                      std::to_string(angular_resolution_deg));
  }
  if (rounded < 4.0) {
    throw ConfigError("angular resolution yields fewer than 4 rays");
  }
  return static_cast<int>(rounded);
}

PolarGrid to_polar(const GrayImage& image, double angular_resolution_deg) {
  PolarGrid grid;
  grid.n_rays = rays_for_resolution(angular_resolution_deg);
  grid.angular_resolution_deg = angular_resolution_deg;
  grid.center_x = 0.5 * (image.width() - 1);
  grid.center_y = 0.5 * (image.height() - 1);
  grid.max_radius = std::hypot(grid.center_x, grid.center_y);
  grid.n_rings = static_cast<int>(std::floor(grid.max_radius)) + 1;
  grid.samples.assign(static_cast<std::size_t>(grid.n_rays) * grid.n_rings, 0.0);

  const double step = grid.delta_theta();
  for (int ray = 0; ray < grid.n_rays; ++ray) {
    const double theta = ray * step;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (int ring = 0; ring < grid.n_rings; ++ring) {
      const double r = ring * grid.ring_step;
      grid.at(ray, ring) =
          bilinear_sample(image, grid.center_x + r * c, grid.center_y + r * s);
    }
  }
  return grid;
}

double relative_l2_error(const PolarGrid& reference, const PolarGrid& other) {
  if (reference.n_rays != other.n_rays || reference.n_rings != other.n_rings) {
    throw ConfigError("relative_l2_error: grid shapes differ");
  }
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < reference.samples.size(); ++k) {
    const double d = other.samples[k] - reference.samples[k];
    diff += d * d;
    norm += reference.samples[k] * reference.samples[k];
  }
  if (norm == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(diff / norm);
}

void write_polar_csv(std::ostream& out, const PolarGrid& grid) {
  const auto old_precision = out.precision(17);
  for (int ray = 0; ray < grid.n_rays; ++ray) {
    for (int ring = 0; ring < grid.n_rings; ++ring) {
      if (ring > 0) out << ',';
      out << grid.at(ray, ring);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace polarfreq
