#include "polarfreq/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarfreq/error.hpp"

namespace polarfreq {

namespace {

void check_dimensions(int width, int height) {
  if (width < 2 || height < 2) {
    throw InputDomainError("image must be at least 2x2, got " +
                           std::to_string(width) + "x" +
                           std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  if (!std::isfinite(fill)) throw InputDomainError("non-finite fill value");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw InputDomainError("pixel count " + std::to_string(pixels_.size()) +
                           " does not match " + std::to_string(width) + "x" +
                           std::to_string(height));
  }
  if (!std::all_of(pixels_.begin(), pixels_.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw InputDomainError("image contains non-finite intensities");
  }
}

double GrayImage::min_value() const {
  return pixels_.empty() ? 0.0 : *std::min_element(pixels_.begin(), pixels_.end());
}

double GrayImage::max_value() const {
  return pixels_.empty() ? 0.0 : *std::max_element(pixels_.begin(), pixels_.end());
}

}  // namespace polarfreq
