#include "polarfreq/fourier_bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polarfreq/error.hpp"

namespace polarfreq {

void FBTConfig::validate() const {
  if (max_order < 0) throw ConfigError("max_order must be >= 0");
  if (max_root < 1) throw ConfigError("max_root must be >= 1");
  rays_for_resolution(angular_resolution_deg);
}

FBSpectrum::FBSpectrum(int max_order, int max_root, double radius)
    : max_order(max_order),
      max_root(max_root),
      radius(radius),
      a(static_cast<std::size_t>(max_order + 1) * max_root, 0.0),
      b(static_cast<std::size_t>(max_order + 1) * max_root, 0.0) {}

FourierBesselBasis::FourierBesselBasis(const FBTConfig& config,
                                       const BesselRootTable& roots,
                                       int n_rays, int n_rings, double radius)
    : max_order_(config.max_order),
      max_root_(config.max_root),
      n_rays_(n_rays),
      n_rings_(n_rings),
      radius_(radius) {
  config.validate();
  if (!roots.covers(max_order_, max_root_)) {
    throw ConfigError("root table (" + std::to_string(roots.max_order()) + "x" +
                      std::to_string(roots.max_root()) +
                      ") does not cover the requested spectrum (" +
                      std::to_string(max_order_) + "x" +
                      std::to_string(max_root_) + ")");
  }
  if (n_rays < 1 || n_rings < 1 || !(radius > 0.0)) {
    throw ConfigError("empty polar geometry");
  }

  const auto orders = static_cast<std::size_t>(max_order_ + 1);
  delta_theta_ = 2.0 * std::numbers::pi / n_rays;
  cos_.resize(orders * n_rays);
  sin_.resize(orders * n_rays);
  for (int n = 0; n <= max_order_; ++n) {
    for (int ray = 0; ray < n_rays; ++ray) {
      // Reduce n*k modulo n_rays so large orders keep exact table angles.
      const long long phase = (static_cast<long long>(n) * ray) % n_rays;
      const double theta = phase * delta_theta_;
      cos_[n * static_cast<std::size_t>(n_rays) + ray] = std::cos(theta);
      sin_[n * static_cast<std::size_t>(n_rays) + ray] = std::sin(theta);
    }
  }

  radial_.assign(orders * max_root_ * n_rings, 0.0);
  prefactor_.resize(orders * max_root_);
  const double area = std::numbers::pi * radius * radius;
  for (int n = 0; n <= max_order_; ++n) {
    for (int i = 1; i <= max_root_; ++i) {
      const double alpha = roots.root(n, i);
      const std::size_t ni = static_cast<std::size_t>(n) * max_root_ + (i - 1);
      const double jn1 = bessel_j(n + 1, alpha);
      prefactor_[ni] = (n == 0 ? 1.0 : 2.0) / (area * jn1 * jn1);
      for (int ring = 0; ring < n_rings; ++ring) {
        const double r = ring;
        if (r > radius) break;
        radial_[ni * n_rings + ring] = r * bessel_j(n, alpha * r / radius);
      }
    }
  }
}

bool FourierBesselBasis::matches(const PolarGrid& grid) const noexcept {
  return grid.n_rays == n_rays_ && grid.n_rings == n_rings_ &&
         grid.max_radius == radius_ && grid.ring_step == 1.0;
}

FBSpectrum FourierBesselBasis::transform(const PolarGrid& grid) const {
  if (!matches(grid)) {
    throw ConfigError("polar grid geometry does not match the basis");
  }
  FBSpectrum out(max_order_, max_root_, radius_);
  std::vector<double> cos_proj(n_rings_);
  std::vector<double> sin_proj(n_rings_);

  for (int n = 0; n <= max_order_; ++n) {
    std::fill(cos_proj.begin(), cos_proj.end(), 0.0);
    std::fill(sin_proj.begin(), sin_proj.end(), 0.0);
    const double* cs = &cos_[n * static_cast<std::size_t>(n_rays_)];
    const double* sn = &sin_[n * static_cast<std::size_t>(n_rays_)];
    for (int ray = 0; ray < n_rays_; ++ray) {
      const double* row = &grid.samples[static_cast<std::size_t>(ray) * n_rings_];
      const double c = cs[ray];
      const double s = sn[ray];
      for (int ring = 0; ring < n_rings_; ++ring) {
        cos_proj[ring] += row[ring] * c;
        sin_proj[ring] += row[ring] * s;
      }
    }

    for (int i = 1; i <= max_root_; ++i) {
      const std::size_t ni = static_cast<std::size_t>(n) * max_root_ + (i - 1);
      const double* kernel = &radial_[ni * n_rings_];
      double acc_a = 0.0;
      double acc_b = 0.0;
      for (int ring = 0; ring < n_rings_; ++ring) {
        acc_a += cos_proj[ring] * kernel[ring];
        acc_b += sin_proj[ring] * kernel[ring];
      }
      const double scale = prefactor_[ni] * delta_theta_;
      out.A(n, i) = scale * acc_a;
      out.B(n, i) = n == 0 ? 0.0 : scale * acc_b;
    }
  }
  return out;
}

FBSpectrum fbt(const PolarGrid& grid, const FBTConfig& config,
               const BesselRootTable& roots) {
  if (grid.samples.empty()) throw ConfigError("fbt: empty polar grid");
  if (std::abs(grid.angular_resolution_deg - config.angular_resolution_deg) > 1e-12) {
    throw ConfigError("fbt: grid resolution differs from the configuration");
  }
  const FourierBesselBasis basis(config, roots, grid.n_rays, grid.n_rings,
                                 grid.max_radius);
  return basis.transform(grid);
}

std::vector<SpectrumPeak> top_coefficients(const FBSpectrum& spectrum, int count,
                                           bool exclude_dc) {
  std::vector<SpectrumPeak> peaks;
  for (int n = 0; n <= spectrum.max_order; ++n) {
    for (int i = 1; i <= spectrum.max_root; ++i) {
      if (exclude_dc && n == 0 && i == 1) continue;
      peaks.push_back({n, i, std::max(std::abs(spectrum.A(n, i)), std::abs(spectrum.B(n, i)))});
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const SpectrumPeak& l, const SpectrumPeak& r) {
                     return l.magnitude > r.magnitude;
                   });
  if (count >= 0 && static_cast<std::size_t>(count) < peaks.size()) peaks.resize(count);
  return peaks;
}

PolarGrid inverse_fbt(const FBSpectrum& spectrum, const BesselRootTable& roots,
                      int n_rays, int n_rings) {
  if (!roots.covers(spectrum.max_order, spectrum.max_root)) {
    throw ConfigError("inverse_fbt: root table does not cover the spectrum");
  }
  if (n_rays < 1 || n_rings < 1) throw ConfigError("inverse_fbt: empty grid");

  PolarGrid grid;
  grid.n_rays = n_rays;
  grid.n_rings = n_rings;
  grid.angular_resolution_deg = 360.0 / n_rays;
  grid.max_radius = spectrum.radius;
  grid.samples.assign(static_cast<std::size_t>(n_rays) * n_rings, 0.0);

  const double step = 2.0 * std::numbers::pi / n_rays;
  const double radius = spectrum.radius;
  std::vector<double> cos_coef(n_rings);
  std::vector<double> sin_coef(n_rings);

  for (int n = 0; n <= spectrum.max_order; ++n) {
    // Radial profiles of order n: sum_i A[n][i] J_n(alpha r / R), same for B.
    std::fill(cos_coef.begin(), cos_coef.end(), 0.0);
    std::fill(sin_coef.begin(), sin_coef.end(), 0.0);
    for (int i = 1; i <= spectrum.max_root; ++i) {
      const double alpha = roots.root(n, i);
      const double a = spectrum.A(n, i);
      const double b = spectrum.B(n, i);
      if (a == 0.0 && b == 0.0) continue;
      for (int ring = 0; ring < n_rings; ++ring) {
        const double r = ring;
        if (r > radius) break;
        const double j = bessel_j(n, alpha * r / radius);
        cos_coef[ring] += a * j;
        sin_coef[ring] += b * j;
      }
    }
    for (int ray = 0; ray < n_rays; ++ray) {
      const long long phase = (static_cast<long long>(n) * ray) % n_rays;
      const double c = std::cos(phase * step);
      const double s = std::sin(phase * step);
      for (int ring = 0; ring < n_rings; ++ring) {
        grid.at(ray, ring) += cos_coef[ring] * c + sin_coef[ring] * s;
      }
    }
  }
  return grid;
}

PolarGrid inverse_fbt(const FBSpectrum& spectrum, int n_rays, int n_rings) {
  const auto roots = build_root_table(spectrum.max_order, spectrum.max_root);
  return inverse_fbt(spectrum, roots, n_rays, n_rings);
}

}  // namespace polarfreq
