#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "polarfreq/error.hpp"
#include "polarfreq/polar.hpp"
#include "test_images.hpp"

using namespace polarfreq;

TEST(Bilinear, TwoByTwo) {
  const GrayImage img(2, 2, {0.0, 1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 0.5, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 1.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 1.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 0.25, 0.0), 0.25);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 0.0, 0.75), 1.5);
}

TEST(Bilinear, OutsideIsZero) {
  const GrayImage img(3, 3, 5.0);
  EXPECT_EQ(bilinear_sample(img, -0.01, 1.0), 0.0);
  EXPECT_EQ(bilinear_sample(img, 1.0, 2.01), 0.0);
  EXPECT_DOUBLE_EQ(bilinear_sample(img, 2.0, 2.0), 5.0);
  EXPECT_THROW(bilinear_sample(img, std::nan(""), 1.0), InputDomainError);
}

TEST(Bilinear, StaysWithinNeighbourRange) {
  const auto img = testimg::random_image(9, 7, 5);
  for (double y = 0.0; y <= 6.0; y += 0.13) {
    for (double x = 0.0; x <= 8.0; x += 0.17) {
      const int x0 = static_cast<int>(std::min(std::floor(x), 7.0));
      const int y0 = static_cast<int>(std::min(std::floor(y), 5.0));
      double lo = img.at(x0, y0), hi = lo;
      for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
          lo = std::min(lo, img.at(x0 + dx, y0 + dy));
          hi = std::max(hi, img.at(x0 + dx, y0 + dy));
        }
      }
      const double v = bilinear_sample(img, x, y);
      EXPECT_GE(v, lo - 1e-12);
      EXPECT_LE(v, hi + 1e-12);
    }
  }
}

TEST(RaysForResolution, Divisors) {
  EXPECT_EQ(rays_for_resolution(0.5), 720);
  EXPECT_EQ(rays_for_resolution(1.0), 360);
  EXPECT_EQ(rays_for_resolution(90.0), 4);
  EXPECT_THROW(rays_for_resolution(0.7), ConfigError);
  EXPECT_THROW(rays_for_resolution(120.0), ConfigError);
  EXPECT_THROW(rays_for_resolution(0.0), ConfigError);
  EXPECT_THROW(rays_for_resolution(-1.0), ConfigError);
}

TEST(ToPolar, Geometry131) {
  const GrayImage img(131, 131, 1.0);
  const auto grid = to_polar(img, 0.5);
  EXPECT_EQ(grid.n_rays, 720);
  EXPECT_DOUBLE_EQ(grid.center_x, 65.0);
  EXPECT_DOUBLE_EQ(grid.center_y, 65.0);
  EXPECT_NEAR(grid.max_radius, 65.0 * std::numbers::sqrt2, 1e-12);
  EXPECT_EQ(grid.n_rings, 92);
  EXPECT_EQ(grid.samples.size(), 720u * 92u);
  EXPECT_NEAR(grid.delta_theta(), std::numbers::pi / 360.0, 1e-15);
}

TEST(ToPolar, RaysFollowImageAxes) {
  GrayImage img(5, 5, 0.0);
  img.at(4, 2) = 1.0;  // +x
  img.at(2, 4) = 2.0;  // +y (down)
  const auto grid = to_polar(img, 90.0);
  EXPECT_NEAR(grid.at(0, 2), 1.0, 1e-12);
  EXPECT_NEAR(grid.at(1, 2), 2.0, 1e-12);
  EXPECT_NEAR(grid.at(2, 2), 0.0, 1e-12);
}

TEST(ToPolar, SamplesBoundedByImageRange) {
  const auto img = testimg::random_image(40, 50, 9);
  const auto grid = to_polar(img, 1.0);
  for (double v : grid.samples) {
    // Corners fall outside on some rays, which contributes zeros.
    EXPECT_GE(v, std::min(0.0, img.min_value()) - 1e-12);
    EXPECT_LE(v, img.max_value() + 1e-12);
  }
}

TEST(ToPolar, QuarterTurnShiftsRays) {
  const auto img = testimg::random_image(31, 31, 2);
  const auto rotated = testimg::rotate_quarter(img);
  const auto a = to_polar(img, 1.0);
  const auto b = to_polar(rotated, 1.0);
  const int shift = a.n_rays / 4;
  for (int ray = 0; ray < a.n_rays; ++ray) {
    for (int ring = 0; ring < a.n_rings; ++ring) {
      EXPECT_NEAR(b.at((ray + shift) % a.n_rays, ring), a.at(ray, ring), 1e-9);
    }
  }
}

TEST(ToPolar, CenterRingIsCenterPixel) {
  const auto img = testimg::random_image(7, 7, 4);
  const auto grid = to_polar(img, 10.0);
  for (int ray = 0; ray < grid.n_rays; ++ray) EXPECT_DOUBLE_EQ(grid.at(ray, 0), img.at(3, 3));
}

TEST(RelativeL2, Basics) {
  const auto img = testimg::random_image(9, 9, 1);
  const auto a = to_polar(img, 30.0);
  auto b = a;
  EXPECT_EQ(relative_l2_error(a, b), 0.0);
  for (double& v : b.samples) v *= 1.1;
  EXPECT_NEAR(relative_l2_error(a, b), 0.1, 1e-12);
  const auto c = to_polar(img, 45.0);
  EXPECT_THROW(relative_l2_error(a, c), ConfigError);
}

TEST(PolarCsv, OneLinePerRay) {
  const GrayImage img(4, 4, 2.0);
  const auto grid = to_polar(img, 90.0);
  std::ostringstream out;
  write_polar_csv(out, grid);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}
