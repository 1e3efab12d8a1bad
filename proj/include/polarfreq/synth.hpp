#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarfreq/image.hpp"

namespace polarfreq {

// Test patterns for the polar-frequency transforms. Values are mapped to
// [0, 1] as 0.5 + 0.5 * sin(...).
//
// Radial cycles are counted across the diameter of the analysis disk,
// 2R with R the center-to-corner distance, so that a pattern of c cycles
// lines up with the c-th zero of J_0 on that disk.

GrayImage synth_radial(double cycles, int size, double phase = 0.0);
GrayImage synth_angular(int cycles, int size, double phase = 0.0);
/// Pixel-wise average of synth_radial and synth_angular.
GrayImage synth_mix(double radial_cycles, int angular_cycles, int size);

struct ToyDatasetSpec {
  int subjects = 10;
  int images_per_subject = 10;
  int size = 65;
  /// Uniform jitter on the radial cycle count, +/- this value.
  double radial_jitter = 0.1;
  /// Uniform jitter on the angular phase, +/- this many degrees.
  double phase_jitter_deg = 3.0;
  /// Standard deviation of additive Gaussian pixel noise.
  double noise = 0.02;
  std::uint64_t seed = 7;
};

struct SyntheticImage {
  std::string image_id;
  std::string subject_id;
  GrayImage image;
};

/// Subject s gets the (radial, angular) pair (3 + 3 * (s / 5), 2 + s % 5);
/// each image jitters the pattern and adds noise. Deterministic in the seed.
std::vector<SyntheticImage> make_toy_dataset(const ToyDatasetSpec& spec);

}  // namespace polarfreq
