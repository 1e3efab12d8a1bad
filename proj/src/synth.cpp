#include "polarfreq/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "polarfreq/error.hpp"
#include "polarfreq/random.hpp"

namespace polarfreq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_size(int size) {
  if (size < 2) throw InputDomainError("synthetic pattern size must be >= 2");
}

double radial_value(double cycles, double r, double diameter, double phase) {
  return 0.5 + 0.5 * std::sin(kTwoPi * cycles * r / diameter + phase);
}

double angular_value(int cycles, double dx, double dy, double phase) {
  return 0.5 + 0.5 * std::sin(cycles * std::atan2(dy, dx) + phase);
}

}  // namespace

GrayImage synth_radial(double cycles, int size, double phase) {
  check_size(size);
  const double c = 0.5 * (size - 1);
  const double diameter = 2.0 * std::hypot(c, c);
  GrayImage out(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      out.at(x, y) = radial_value(cycles, std::hypot(x - c, y - c), diameter, phase);
    }
  }
  return out;
}

GrayImage synth_angular(int cycles, int size, double phase) {
  check_size(size);
  const double c = 0.5 * (size - 1);
  GrayImage out(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      out.at(x, y) = angular_value(cycles, x - c, y - c, phase);
    }
  }
  return out;
}

GrayImage synth_mix(double radial_cycles, int angular_cycles, int size) {
  const auto radial = synth_radial(radial_cycles, size);
  const auto angular = synth_angular(angular_cycles, size);
  GrayImage out(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      out.at(x, y) = 0.5 * (radial.at(x, y) + angular.at(x, y));
    }
  }
  return out;
}

std::vector<SyntheticImage> make_toy_dataset(const ToyDatasetSpec& spec) {
  if (spec.subjects < 1 || spec.images_per_subject < 1) {
    throw ConfigError("toy dataset needs at least one subject and one image");
  }
  check_size(spec.size);

  Rng rng(spec.seed);
  const int size = spec.size;
  const double c = 0.5 * (size - 1);
  const double diameter = 2.0 * std::hypot(c, c);
  const double phase_jitter = spec.phase_jitter_deg * std::numbers::pi / 180.0;

  std::vector<SyntheticImage> out;
  out.reserve(static_cast<std::size_t>(spec.subjects) * spec.images_per_subject);
  char name[32];
  for (int s = 0; s < spec.subjects; ++s) {
    const double radial = 3.0 + 3.0 * (s / 5);
    const int angular = 2 + s % 5;
    std::snprintf(name, sizeof name, "s%02d", s + 1);
    const std::string subject = name;
    for (int k = 0; k < spec.images_per_subject; ++k) {
      const double radial_cycles = radial + rng.uniform(-spec.radial_jitter, spec.radial_jitter);
      const double phase = rng.uniform(-phase_jitter, phase_jitter);
      GrayImage image(size, size);
      for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
          const double dx = x - c;
          const double dy = y - c;
          const double value =
              0.5 * (radial_value(radial_cycles, std::hypot(dx, dy), diameter, 0.0) +
                     angular_value(angular, dx, dy, angular * phase));
          image.at(x, y) = value + spec.noise * rng.normal();
        }
      }
      std::snprintf(name, sizeof name, "%02d", k + 1);
      out.push_back({subject + "/" + name, subject, std::move(image)});
    }
  }
  return out;
}

}  // namespace polarfreq
