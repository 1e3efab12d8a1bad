#include <cmath>

#include <gtest/gtest.h>

#include "polarfreq/error.hpp"
#include "polarfreq/synth.hpp"

using namespace polarfreq;

TEST(Synth, ValuesInUnitRangeAndCentered) {
  for (const auto& img : {synth_radial(8, 65), synth_angular(4, 65), synth_mix(8, 4, 65)}) {
    EXPECT_EQ(img.width(), 65);
    EXPECT_GE(img.min_value(), 0.0);
    EXPECT_LE(img.max_value(), 1.0);
  }
  EXPECT_DOUBLE_EQ(synth_radial(8, 65).at(32, 32), 0.5);
}

TEST(Synth, RadialIsRotationallySymmetric) {
  const auto img = synth_radial(5, 41);
  for (int y = 0; y < 41; ++y) {
    for (int x = 0; x < 41; ++x) {
      EXPECT_DOUBLE_EQ(img.at(x, y), img.at(40 - x, y));
      EXPECT_DOUBLE_EQ(img.at(x, y), img.at(y, x));
    }
  }
}

TEST(Synth, AngularHasRequestedPeriod) {
  const auto img = synth_angular(4, 41);
  // Four cycles: a quarter turn maps the pattern onto itself.
  for (int y = 0; y < 41; ++y) {
    for (int x = 0; x < 41; ++x) {
      if (x == 20 && y == 20) continue;
      EXPECT_NEAR(img.at(x, y), img.at(40 - y, x), 1e-12);
    }
  }
}

TEST(Synth, MixIsAverage) {
  const auto r = synth_radial(8, 21), a = synth_angular(3, 21), m = synth_mix(8, 3, 21);
  for (int y = 0; y < 21; ++y) {
    for (int x = 0; x < 21; ++x) EXPECT_NEAR(m.at(x, y), 0.5 * (r.at(x, y) + a.at(x, y)), 1e-15);
  }
}

TEST(ToyDataset, ShapeIdsAndDeterminism) {
  ToyDatasetSpec spec;
  spec.size = 33;
  const auto a = make_toy_dataset(spec);
  const auto b = make_toy_dataset(spec);
  ASSERT_EQ(a.size(), 100u);
  EXPECT_EQ(a.front().image_id, "s01/01");
  EXPECT_EQ(a.front().subject_id, "s01");
  EXPECT_EQ(a.back().image_id, "s10/10");
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].image, b[k].image);
  spec.seed = 8;
  EXPECT_FALSE(make_toy_dataset(spec)[0].image == a[0].image);
  spec.subjects = 0;
  EXPECT_THROW(make_toy_dataset(spec), ConfigError);
}

TEST(Synth, RejectsTinySize) {
  EXPECT_THROW(synth_radial(3, 1), InputDomainError);
}
