#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polarfreq {

/// Row-major grid of real gray intensities. Scale is arbitrary and linear;
/// 8-bit files load as 0..255.
class GrayImage {
public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);
  /// Throws InputDomainError on size mismatch, dimensions below 2 or
  /// non-finite intensities.
  GrayImage(int width, int height, std::vector<double> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  double at(int x, int y) const { return pixels_[index(x, y)]; }
  double& at(int x, int y) { return pixels_[index(x, y)]; }

  std::span<const double> pixels() const noexcept { return pixels_; }
  std::span<double> pixels() noexcept { return pixels_; }

  double min_value() const;
  double max_value() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> pixels_;
};

}  // namespace polarfreq
