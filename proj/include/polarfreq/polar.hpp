#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "polarfreq/image.hpp"

namespace polarfreq {

/// Image resampled on rays (fixed angular step) and rings (1 px apart)
/// around a center. Ray k sits at angle k * angular_resolution, measured
/// from +x towards +y in image coordinates (y grows downward).
struct PolarGrid {
  int n_rays = 0;
  int n_rings = 0;
  double ring_step = 1.0;
  double angular_resolution_deg = 0.0;
  double max_radius = 0.0;
  double center_x = 0.0;
  double center_y = 0.0;
  /// samples[ray * n_rings + ring]
  std::vector<double> samples;

  double at(int ray, int ring) const {
    return samples[static_cast<std::size_t>(ray) * n_rings + ring];
  }
  double& at(int ray, int ring) {
    return samples[static_cast<std::size_t>(ray) * n_rings + ring];
  }

  /// Angular step in radians.
  double delta_theta() const;
};

/// Bilinear blend of the four pixels around (x, y). Points outside
/// [0, width-1] x [0, height-1] give 0. Throws InputDomainError on
/// non-finite coordinates.
double bilinear_sample(const GrayImage& image, double x, double y);

/// Number of rays for a resolution in degrees; throws ConfigError unless
/// 360 is a multiple of the resolution (within 1e-9) and at least 4 rays
/// result.
int rays_for_resolution(double angular_resolution_deg);

/// Polar resampling about ((w-1)/2, (h-1)/2). The outer radius reaches the
/// farthest image corner; rings are r = 0, 1, ..., floor(max_radius).
PolarGrid to_polar(const GrayImage& image, double angular_resolution_deg);

/// ||other - reference|| / ||reference|| over all samples. Throws
/// ConfigError when the grids have different shapes.
double relative_l2_error(const PolarGrid& reference, const PolarGrid& other);

/// Debug dump, one row per ray.
void write_polar_csv(std::ostream& out, const PolarGrid& grid);

}  // namespace polarfreq
