#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarfreq/fourier_bessel.hpp"
#include "polarfreq/image.hpp"

namespace polarfreq {

/// Flattened per-image descriptor. `layout_id` names the extraction recipe
/// and shape ("fbt-30x3", "dft-19.5"); vectors with different layouts are
/// never compared.
struct FeatureVector {
  std::string layout_id;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

std::string fbt_layout_id(int max_order, int max_root);
std::string dft_layout_id(double max_cycles);

/// A block then B block, each order-major / root-minor. The B_0 entries are
/// kept (always zero) so the length is (max_order + 1) * max_root * 2.
FeatureVector fbt_features(const FBSpectrum& spectrum);

/// Inverse of fbt_features. The radius is not part of the feature layout
/// and must be supplied. Throws ConfigError on a non-FBT layout or a
/// length mismatch.
FBSpectrum unflatten_fbt(const FeatureVector& features, double radius = 0.0);

/// Polar resampling + Fourier-Bessel transform + flattening for one image.
FeatureVector extract_fbt(const GrayImage& image, const FourierBesselBasis& basis,
                          double angular_resolution_deg);

struct DFTConfig {
  double max_cycles = 19.5;

  void validate() const;
};

/// |F(u, v)| with the 1/sqrt(MN) normalization, indexed by signed
/// frequency (cycles per image) with DC at the center.
class MagnitudeSpectrum {
public:
  MagnitudeSpectrum(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  /// u in [-width/2, width - 1 - width/2], v likewise for height.
  double at(int u, int v) const { return values_[index(u, v)]; }
  double& at(int u, int v) { return values_[index(u, v)]; }

  int min_u() const noexcept { return -(width_ / 2); }
  int max_u() const noexcept { return width_ - 1 - width_ / 2; }
  int min_v() const noexcept { return -(height_ / 2); }
  int max_v() const noexcept { return height_ - 1 - height_ / 2; }

  const std::vector<double>& values() const noexcept { return values_; }

private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(v + height_ / 2) * width_ +
           static_cast<std::size_t>(u + width_ / 2);
  }

  int width_;
  int height_;
  std::vector<double> values_;
};

MagnitudeSpectrum dft_magnitude(const GrayImage& image);

struct FrequencyPair {
  int u = 0;
  int v = 0;
  friend bool operator==(const FrequencyPair&, const FrequencyPair&) = default;
};

/// Integer (u, v) with u^2 + v^2 <= max_cycles^2, sorted by radius, then
/// angle in [0, 2pi), then u. DC comes first.
std::vector<FrequencyPair> dft_selection(double max_cycles);

/// Picks the dft_selection() entries out of a magnitude spectrum. Throws
/// ConfigError if the disk does not fit in the spectrum.
FeatureVector dft_features(const MagnitudeSpectrum& magnitudes,
                           const DFTConfig& config);

}  // namespace polarfreq
