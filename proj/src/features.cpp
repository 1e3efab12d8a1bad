#include "polarfreq/features.hpp"

#include <cstdio>
#include <sstream>

#include "polarfreq/error.hpp"

namespace polarfreq {

std::string fbt_layout_id(int max_order, int max_root) {
  return "fbt-" + std::to_string(max_order) + "x" + std::to_string(max_root);
}

std::string dft_layout_id(double max_cycles) {
  std::ostringstream out;
  out << "dft-" << max_cycles;
  return out.str();
}

FeatureVector fbt_features(const FBSpectrum& spectrum) {
  FeatureVector out;
  out.layout_id = fbt_layout_id(spectrum.max_order, spectrum.max_root);
  out.values.reserve(spectrum.a.size() + spectrum.b.size());
  out.values.insert(out.values.end(), spectrum.a.begin(), spectrum.a.end());
  out.values.insert(out.values.end(), spectrum.b.begin(), spectrum.b.end());
  return out;
}

FBSpectrum unflatten_fbt(const FeatureVector& features, double radius) {
  int max_order = -1;
  int max_root = 0;
  char tail = 0;
  if (std::sscanf(features.layout_id.c_str(), "fbt-%dx%d%c", &max_order,
                  &max_root, &tail) != 2 ||
      max_order < 0 || max_root < 1) {
    throw ConfigError("not an FBT layout: '" + features.layout_id + "'");
  }
  FBSpectrum out(max_order, max_root, radius);
  if (features.values.size() != out.a.size() + out.b.size()) {
    throw ConfigError("feature length " + std::to_string(features.size()) +
                      " does not match layout " + features.layout_id);
  }
  const auto half = static_cast<std::ptrdiff_t>(out.a.size());
  std::copy(features.values.begin(), features.values.begin() + half, out.a.begin());
  std::copy(features.values.begin() + half, features.values.end(), out.b.begin());
  return out;
}

FeatureVector extract_fbt(const GrayImage& image, const FourierBesselBasis& basis,
                          double angular_resolution_deg) {
  return fbt_features(basis.transform(to_polar(image, angular_resolution_deg)));
}

}  // namespace polarfreq
