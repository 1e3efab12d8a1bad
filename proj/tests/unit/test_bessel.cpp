#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarfreq/bessel.hpp"
#include "polarfreq/error.hpp"

using namespace polarfreq;

TEST(BesselJ, KnownValues) {
  EXPECT_NEAR(bessel_j(0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(bessel_j(3, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(bessel_j(0, 1.0), 0.7651976865579666, 1e-14);
  EXPECT_NEAR(bessel_j(1, 2.5), 0.4970941024642741, 1e-14);
  EXPECT_NEAR(bessel_j(0, 2.404825557695773), 0.0, 1e-14);
}

TEST(BesselJ, MatchesMultiprecisionSeries) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> order(0, 30);
  std::uniform_real_distribution<double> arg(0.0, 130.0);
  for (int t = 0; t < 300; ++t) {
    const int n = order(gen);
    const double x = arg(gen);
    EXPECT_NEAR(bessel_j(n, x), oracle::bessel(n, x), 1e-12) << "n=" << n << " x=" << x;
  }
  // Both sides of the series/recurrence switch.
  for (int n : {0, 1, 7, 30}) {
    for (double x : {11.999, 12.0, 12.001}) {
      EXPECT_NEAR(bessel_j(n, x), oracle::bessel(n, x), 1e-12);
    }
  }
}

TEST(BesselJ, RecurrenceIdentity) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> order(1, 40);
  std::uniform_real_distribution<double> arg(0.01, 150.0);
  for (int t = 0; t < 1000; ++t) {
    const int n = order(gen);
    const double x = arg(gen);
    const double residual =
        bessel_j(n - 1, x) + bessel_j(n + 1, x) - 2.0 * n / x * bessel_j(n, x);
    EXPECT_LT(std::abs(residual), 1e-9) << "n=" << n << " x=" << x;
  }
}

TEST(BesselJ, BoundedByOne) {
  for (int n = 0; n <= 30; n += 3) {
    for (double x = 0.0; x < 200.0; x += 0.37) EXPECT_LE(std::abs(bessel_j(n, x)), 1.0);
  }
}

TEST(BesselJ, RejectsBadDomain) {
  EXPECT_THROW(bessel_j(-1, 1.0), InputDomainError);
  EXPECT_THROW(bessel_j(0, -0.5), InputDomainError);
  EXPECT_THROW(bessel_j(0, std::nan("")), InputDomainError);
}

TEST(BesselRoots, KnownFirstZeros) {
  EXPECT_NEAR(bessel_roots(0, 1)[0], 2.404825557695773, 1e-9);
  EXPECT_NEAR(bessel_roots(1, 1)[0], 3.831705970207512, 1e-9);
  EXPECT_NEAR(bessel_roots(0, 8)[7], 24.35247153074930, 1e-9);
}

TEST(BesselRoots, MatchOracleAtSelectedOrders) {
  for (int n : {0, 1, 5, 30}) {
    const auto roots = bessel_roots(n, 30);
    const auto expected = oracle::bessel_zeros(n, 30);
    ASSERT_EQ(roots.size(), 30u);
    for (int i = 0; i < 30; ++i) EXPECT_NEAR(roots[i], expected[i], 1e-9) << n << "," << i;
  }
}

TEST(BesselRoots, TableInvariants) {
  const auto table = build_root_table(30, 10);
  EXPECT_TRUE(table.covers(30, 10));
  EXPECT_FALSE(table.covers(31, 10));
  for (int n = 0; n <= 30; ++n) {
    EXPECT_GT(table.root(n, 1), static_cast<double>(n));
    for (int i = 1; i <= 10; ++i) {
      EXPECT_LT(std::abs(bessel_j(n, table.root(n, i))), 1e-10);
      if (i > 1) {
        EXPECT_GT(table.root(n, i), table.root(n, i - 1));
      }
      if (n > 0) {
        EXPECT_GT(table.root(n, i), table.root(n - 1, i));  // interlacing
      }
    }
  }
}

TEST(BesselRoots, CsvDump) {
  const auto table = build_root_table(1, 2);
  std::ostringstream out;
  table.write_csv(out);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, 10), "2.40482555");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}

TEST(BesselRoots, RejectsBadCounts) {
  EXPECT_THROW(bessel_roots(-1, 3), InputDomainError);
  EXPECT_THROW(build_root_table(3, 0), InputDomainError);
}
