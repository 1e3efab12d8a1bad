#pragma once

#include <cstddef>
#include <vector>

#include "polarfreq/bessel.hpp"
#include "polarfreq/polar.hpp"

namespace polarfreq {

struct FBTConfig {
  int max_order = 30;
  int max_root = 3;
  double angular_resolution_deg = 0.5;

  /// Throws ConfigError on max_order < 0, max_root < 1 or a resolution
  /// that does not divide 360.
  void validate() const;
};

/// Fourier-Bessel coefficients A[n][i], B[n][i] for n in [0, max_order],
/// i in [1, max_root]. B[0][*] is identically zero.
struct FBSpectrum {
  int max_order = 0;
  int max_root = 0;
  double radius = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  FBSpectrum() = default;
  FBSpectrum(int max_order, int max_root, double radius);

  double A(int n, int i) const { return a[offset(n, i)]; }
  double& A(int n, int i) { return a[offset(n, i)]; }
  double B(int n, int i) const { return b[offset(n, i)]; }
  double& B(int n, int i) { return b[offset(n, i)]; }

  /// i is 1-based.
  std::size_t offset(int n, int i) const {
    return static_cast<std::size_t>(n) * max_root + (i - 1);
  }

  friend bool operator==(const FBSpectrum&, const FBSpectrum&) = default;
};

/// Precomputed quadrature tables for one polar geometry: the weighted
/// radial kernels r * J_n(alpha_{n,i} r / R) * dr, the angular cos/sin
/// tables and the normalization prefactors. Immutable and shareable across
/// threads once built.
class FourierBesselBasis {
public:
  FourierBesselBasis(const FBTConfig& config, const BesselRootTable& roots,
                     int n_rays, int n_rings, double radius);

  int max_order() const noexcept { return max_order_; }
  int max_root() const noexcept { return max_root_; }
  int n_rays() const noexcept { return n_rays_; }
  int n_rings() const noexcept { return n_rings_; }
  double radius() const noexcept { return radius_; }

  bool matches(const PolarGrid& grid) const noexcept;

  FBSpectrum transform(const PolarGrid& grid) const;

private:
  int max_order_;
  int max_root_;
  int n_rays_;
  int n_rings_;
  double radius_;
  double delta_theta_;
  std::vector<double> cos_;     // [n][ray]
  std::vector<double> sin_;     // [n][ray]
  std::vector<double> radial_;  // [n][i][ring]
  std::vector<double> prefactor_;  // [n][i]
};

/// Discrete Riemann-sum evaluation of the Fourier-Bessel coefficients.
/// Throws ConfigError when the root table does not cover the config or the
/// grid's resolution differs from config.angular_resolution_deg.
FBSpectrum fbt(const PolarGrid& grid, const FBTConfig& config,
               const BesselRootTable& roots);

struct SpectrumPeak {
  int order = 0;
  int root = 0;
  double magnitude = 0.0;  // max(|A|, |B|) at this location
};

/// The `count` (order, root) locations with the largest max(|A|, |B|),
/// descending; ties keep (order, root) order. The DC term (0, 1) is
/// skipped when exclude_dc is set.
std::vector<SpectrumPeak> top_coefficients(const FBSpectrum& spectrum, int count,
                                           bool exclude_dc = true);

/// Evaluates the truncated Fourier-Bessel series on an n_rays x n_rings
/// grid (ring spacing 1 px). Rings beyond the spectrum radius are 0.
PolarGrid inverse_fbt(const FBSpectrum& spectrum, const BesselRootTable& roots,
                      int n_rays, int n_rings);
PolarGrid inverse_fbt(const FBSpectrum& spectrum, int n_rays, int n_rings);

}  // namespace polarfreq
