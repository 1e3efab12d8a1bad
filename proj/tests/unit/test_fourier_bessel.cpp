#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "polarfreq/error.hpp"
#include "polarfreq/features.hpp"
#include "polarfreq/fourier_bessel.hpp"
#include "polarfreq/pgm.hpp"
#include "polarfreq/synth.hpp"
#include "test_images.hpp"

using namespace polarfreq;

namespace {

FBSpectrum transform(const GrayImage& img, const FBTConfig& config) {
  const auto roots = build_root_table(config.max_order, config.max_root);
  return fbt(to_polar(img, config.angular_resolution_deg), config, roots);
}

}  // namespace

TEST(FBTConfig, Validation) {
  FBTConfig{}.validate();
  EXPECT_THROW((FBTConfig{-1, 3, 0.5}).validate(), ConfigError);
  EXPECT_THROW((FBTConfig{3, 0, 0.5}).validate(), ConfigError);
  EXPECT_THROW((FBTConfig{3, 3, 0.7}).validate(), ConfigError);
}

TEST(FBT, ZeroImageGivesZeroSpectrum) {
  const auto s = transform(GrayImage(21, 21, 0.0), {5, 3, 2.0});
  for (double v : s.a) EXPECT_EQ(v, 0.0);
  for (double v : s.b) EXPECT_EQ(v, 0.0);
}

TEST(FBT, BZeroRowIsZero) {
  const auto s = transform(testimg::random_image(25, 25, 3), {6, 4, 1.0});
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(s.B(0, i), 0.0);
  EXPECT_EQ(s.a.size(), 7u * 4u);
  EXPECT_EQ(s.b.size(), 7u * 4u);
}

TEST(FBT, Linear) {
  const FBTConfig config{8, 3, 1.0};
  const auto f = testimg::random_image(23, 23, 1);
  const auto g = testimg::random_image(23, 23, 2);
  GrayImage h(23, 23);
  for (int y = 0; y < 23; ++y) {
    for (int x = 0; x < 23; ++x) h.at(x, y) = 2.0 * f.at(x, y) - 0.5 * g.at(x, y);
  }
  const auto sf = transform(f, config), sg = transform(g, config), sh = transform(h, config);
  for (std::size_t k = 0; k < sh.a.size(); ++k) {
    EXPECT_NEAR(sh.a[k], 2.0 * sf.a[k] - 0.5 * sg.a[k], 1e-12);
    EXPECT_NEAR(sh.b[k], 2.0 * sf.b[k] - 0.5 * sg.b[k], 1e-12);
  }
}

TEST(FBT, RejectsMismatches) {
  const auto grid = to_polar(GrayImage(11, 11, 1.0), 1.0);
  const auto roots = build_root_table(3, 2);
  EXPECT_THROW(fbt(grid, {3, 2, 0.5}, roots), ConfigError);
  EXPECT_THROW(fbt(grid, {4, 2, 1.0}, roots), ConfigError);
  EXPECT_THROW(fbt(grid, {3, 3, 1.0}, roots), ConfigError);
}

TEST(FBT, BasisMatchesFreeFunction) {
  const FBTConfig config{5, 3, 2.0};
  const auto roots = build_root_table(5, 3);
  const auto grid = to_polar(testimg::random_image(17, 17, 8), 2.0);
  const FourierBesselBasis basis(config, roots, grid.n_rays, grid.n_rings, grid.max_radius);
  EXPECT_TRUE(basis.matches(grid));
  EXPECT_EQ(basis.transform(grid), fbt(grid, config, roots));
}

// A single basis function J_n(alpha r / R) cos(n theta) sampled on the grid
// should be recovered as a spike at (n, i) by the forward transform.
TEST(FBT, SingleTermRoundTrip) {
  const FBTConfig config{6, 4, 1.0};
  const auto roots = build_root_table(6, 4);
  FBSpectrum spec(6, 4, 60.0);
  spec.A(3, 2) = 1.0;
  const auto grid = inverse_fbt(spec, roots, 360, 61);
  // Spot check the synthesized values.
  EXPECT_NEAR(grid.at(0, 30), bessel_j(3, roots.root(3, 2) * 0.5), 1e-12);
  EXPECT_NEAR(grid.at(40, 30), bessel_j(3, roots.root(3, 2) * 0.5) *
                                   std::cos(3.0 * 40.0 * std::numbers::pi / 180.0),
              1e-12);
  const auto back = fbt(grid, config, roots);
  EXPECT_NEAR(back.A(3, 2), 1.0, 0.05);
  for (int n = 0; n <= 6; ++n) {
    for (int i = 1; i <= 4; ++i) {
      if (n != 3 || i != 2) {
        EXPECT_LT(std::abs(back.A(n, i)), 0.05);
      }
      EXPECT_LT(std::abs(back.B(n, i)), 0.05);
    }
  }
}

TEST(FBT, RandomSpectrumRoundTripWithinFivePercent) {
  const FBTConfig config{10, 3, 0.5};
  const auto roots = build_root_table(10, 3);
  std::mt19937_64 gen(4);
  std::normal_distribution<double> dist;
  FBSpectrum spec(10, 3, 80.0);
  for (int n = 0; n <= 10; ++n) {
    for (int i = 1; i <= 3; ++i) {
      spec.A(n, i) = dist(gen);
      if (n > 0) spec.B(n, i) = dist(gen);
    }
  }
  const auto back = fbt(inverse_fbt(spec, roots, 720, 81), config, roots);
  double diff = 0.0, norm = 0.0;
  for (std::size_t k = 0; k < spec.a.size(); ++k) {
    diff += std::pow(back.a[k] - spec.a[k], 2) + std::pow(back.b[k] - spec.b[k], 2);
    norm += spec.a[k] * spec.a[k] + spec.b[k] * spec.b[k];
  }
  EXPECT_LT(std::sqrt(diff / norm), 0.05);
}

TEST(FBT, QuarterTurnRotatesCoefficientPairs) {
  const FBTConfig config{12, 3, 1.0};
  const auto img = testimg::random_image(41, 41, 6);
  const auto s = transform(img, config);
  const auto r = transform(testimg::rotate_quarter(img), config);
  // f'(theta) = f(theta - pi/2), so (A', B') is (A, B) rotated by n * pi/2.
  for (int n = 0; n <= 12; ++n) {
    const double c = std::cos(n * std::numbers::pi / 2), sn = std::sin(n * std::numbers::pi / 2);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_NEAR(r.A(n, i), c * s.A(n, i) - sn * s.B(n, i), 1e-9);
      EXPECT_NEAR(r.B(n, i), sn * s.A(n, i) + c * s.B(n, i), 1e-9);
      EXPECT_NEAR(std::hypot(r.A(n, i), r.B(n, i)), std::hypot(s.A(n, i), s.B(n, i)), 1e-9);
    }
  }
}

TEST(FBT, PrincipalComponentsOfSyntheticPatterns) {
  const FBTConfig config{30, 10, 0.5};
  auto top = [&](const GrayImage& img, int count) {
    std::set<std::pair<int, int>> out;
    for (const auto& p : top_coefficients(transform(img, config), count)) {
      out.insert({p.order, p.root});
    }
    return out;
  };
  EXPECT_EQ(top(synth_radial(8, 131), 1), (std::set<std::pair<int, int>>{{0, 8}}));
  EXPECT_EQ(top(synth_angular(4, 131), 1), (std::set<std::pair<int, int>>{{4, 1}}));
  EXPECT_EQ(top(synth_mix(8, 4, 131), 2), (std::set<std::pair<int, int>>{{0, 8}, {4, 1}}));
}

TEST(FBT, TopCoefficientsOrderingAndDc) {
  FBSpectrum s(2, 2, 10.0);
  s.A(0, 1) = 100.0;
  s.A(1, 2) = -3.0;
  s.B(2, 1) = 3.0;
  s.A(2, 2) = 1.0;
  const auto peaks = top_coefficients(s, 3);
  ASSERT_EQ(peaks.size(), 3u);
  EXPECT_EQ(peaks[0].order, 1);
  EXPECT_EQ(peaks[0].root, 2);
  EXPECT_DOUBLE_EQ(peaks[0].magnitude, 3.0);
  EXPECT_EQ(peaks[1].order, 2);
  EXPECT_EQ(peaks[2].root, 2);
  EXPECT_EQ(top_coefficients(s, 1, false)[0].order, 0);
}

TEST(FBT, ReconstructionImprovesWithMoreRoots) {
  const auto face = load_pgm(testimg::data_path("astronaut_face.pgm"));
  const auto grid = to_polar(face, 0.5);
  double previous = 1.0;
  for (int max_root : {3, 10, 30}) {
    const FBTConfig config{30, max_root, 0.5};
    const auto roots = build_root_table(30, max_root);
    const auto recon = inverse_fbt(fbt(grid, config, roots), roots, grid.n_rays, grid.n_rings);
    const double err = relative_l2_error(grid, recon);
    EXPECT_LT(err, previous) << "max_root " << max_root;
    previous = err;
  }
  EXPECT_LT(previous, 0.2);
}

TEST(FBTFeatures, LayoutAndRoundTrip) {
  FBSpectrum s(30, 3, 50.0);
  for (std::size_t k = 0; k < s.a.size(); ++k) s.a[k] = static_cast<double>(k);
  for (std::size_t k = 3; k < s.b.size(); ++k) s.b[k] = -static_cast<double>(k);
  const auto fv = fbt_features(s);
  EXPECT_EQ(fv.layout_id, "fbt-30x3");
  ASSERT_EQ(fv.size(), 186u);
  EXPECT_EQ(fv.values[4], s.A(1, 2));
  EXPECT_EQ(fv.values[93 + 4], s.B(1, 2));
  EXPECT_EQ(unflatten_fbt(fv, 50.0), s);
  EXPECT_THROW(unflatten_fbt(FeatureVector{"dft-19.5", fv.values}), ConfigError);
  EXPECT_THROW(unflatten_fbt(FeatureVector{"fbt-30x3", {1.0, 2.0}}), ConfigError);
}
