#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "polarfreq/error.hpp"
#include "polarfreq/features.hpp"

namespace polarfreq {

namespace {

double angle_of(const FrequencyPair& p) {
  double a = std::atan2(static_cast<double>(p.v), static_cast<double>(p.u));
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

// exp(-2 pi i k / n) for k in [0, n), using exact modular phases.
std::vector<std::complex<double>> twiddles(int n) {
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) {
    const double phase = -2.0 * std::numbers::pi * k / n;
    out[k] = {std::cos(phase), std::sin(phase)};
  }
  return out;
}

}  // namespace

void DFTConfig::validate() const {
  if (!(max_cycles >= 0.0) || !std::isfinite(max_cycles)) {
    throw ConfigError("max_cycles must be finite and >= 0");
  }
}

MagnitudeSpectrum::MagnitudeSpectrum(int width, int height)
    : width_(width),
      height_(height),
      values_(static_cast<std::size_t>(width) * height, 0.0) {}

MagnitudeSpectrum dft_magnitude(const GrayImage& image) {
  const int w = image.width();
  const int h = image.height();
  const auto tw_x = twiddles(w);
  const auto tw_y = twiddles(h);

  // Separable evaluation: rows first (x -> u), then columns (y -> v).
  std::vector<std::complex<double>> rows(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int u = 0; u < w; ++u) {
      std::complex<double> acc = 0.0;
      for (int x = 0; x < w; ++x) {
        acc += image.at(x, y) * tw_x[(static_cast<long long>(u) * x) % w];
      }
      rows[static_cast<std::size_t>(y) * w + u] = acc;
    }
  }

  MagnitudeSpectrum out(w, h);
  const double norm = 1.0 / std::sqrt(static_cast<double>(w) * h);
  for (int v = 0; v < h; ++v) {
    const int sv = v <= out.max_v() ? v : v - h;
    for (int u = 0; u < w; ++u) {
      std::complex<double> acc = 0.0;
      for (int y = 0; y < h; ++y) {
        acc += rows[static_cast<std::size_t>(y) * w + u] *
               tw_y[(static_cast<long long>(v) * y) % h];
      }
      const int su = u <= out.max_u() ? u : u - w;
      out.at(su, sv) = std::abs(acc) * norm;
    }
  }
  return out;
}

std::vector<FrequencyPair> dft_selection(double max_cycles) {
  DFTConfig{max_cycles}.validate();
  const int reach = static_cast<int>(std::floor(max_cycles));
  const double limit = max_cycles * max_cycles;
  std::vector<FrequencyPair> pairs;
  for (int v = -reach; v <= reach; ++v) {
    for (int u = -reach; u <= reach; ++u) {
      if (static_cast<double>(u * u + v * v) <= limit) pairs.push_back({u, v});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const FrequencyPair& l, const FrequencyPair& r) {
              const int rl = l.u * l.u + l.v * l.v;
              const int rr = r.u * r.u + r.v * r.v;
              if (rl != rr) return rl < rr;
              const double al = angle_of(l);
              const double ar = angle_of(r);
              if (al != ar) return al < ar;
              return l.u < r.u;
            });
  return pairs;
}

FeatureVector dft_features(const MagnitudeSpectrum& magnitudes,
                           const DFTConfig& config) {
  const auto pairs = dft_selection(config.max_cycles);
  const int reach = static_cast<int>(std::floor(config.max_cycles));
  if (-reach < magnitudes.min_u() || reach > magnitudes.max_u() ||
      -reach < magnitudes.min_v() || reach > magnitudes.max_v()) {
    throw ConfigError("DFT selection radius " + std::to_string(config.max_cycles) +
                      " exceeds the " + std::to_string(magnitudes.width()) + "x" +
                      std::to_string(magnitudes.height()) + " spectrum");
  }
  FeatureVector out;
  out.layout_id = dft_layout_id(config.max_cycles);
  out.values.reserve(pairs.size());
  for (const auto& p : pairs) out.values.push_back(magnitudes.at(p.u, p.v));
  return out;
}

}  // namespace polarfreq
