#include "polarfreq/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "polarfreq/error.hpp"

namespace polarfreq {

namespace {

constexpr double kSeriesLimit = 12.0;
constexpr double kRootTolerance = 1e-10;

double series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  if (term == 0.0) return 0.0;

  const double q = -half * half;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double miller(int n, double x) {
  const double top = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(top) + 30 + static_cast<int>(std::sqrt(40.0 * top));
  start += start % 2;

  const double two_over_x = 2.0 / x;
  double next = 0.0;   // J_{k+1}, unnormalized
  double cur = 1e-30;  // J_k
  double norm = 0.0;
  double wanted = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * cur - next;
    next = cur;
    cur = prev;
    // cur now holds J_{k-1}
    if (k - 1 == n) wanted = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      wanted *= 1e-250;
    }
  }
  norm += cur;
  return wanted / norm;
}

}  // namespace

double bessel_j(int n, double x) {
  if (n < 0) {
    throw InputDomainError("bessel_j: negative order " + std::to_string(n));
  }
  if (!std::isfinite(x) || x < 0.0) {
    throw InputDomainError("bessel_j: argument must be finite and >= 0");
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x <= kSeriesLimit) return series(n, x);
  return miller(n, x);
}

std::vector<double> bessel_roots(int n, int count) {
  if (n < 0) {
    throw InputDomainError("bessel_roots: negative order " + std::to_string(n));
  }
  if (count < 1) {
    throw InputDomainError("bessel_roots: count must be >= 1");
  }

  constexpr double kScanStep = 0.25;
  // Consecutive zeros are never closer than ~3.115 (J_0, first gap).
  constexpr double kMinGap = 3.0;

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(count));

  double lo = 2.0;
  if (n > 0) {
    const double estimate = n + 1.8557 * std::cbrt(static_cast<double>(n));
    lo = std::max(static_cast<double>(n), estimate - 1.0);
  }

  while (static_cast<int>(roots.size()) < count) {
    double a = lo;
    double fa = bessel_j(n, a);
    double b = a + kScanStep;
    double fb = bessel_j(n, b);
    while (fa * fb > 0.0) {
      a = b;
      fa = fb;
      b += kScanStep;
      fb = bessel_j(n, b);
    }

    double root = fb == 0.0 ? b : a;
    if (fa != 0.0 && fb != 0.0) {
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = bessel_j(n, mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      root = 0.5 * (a + b);
    }

    if (std::abs(bessel_j(n, root)) >= kRootTolerance) {
      throw Error("bessel_roots: failed to converge for order " +
                  std::to_string(n));
    }
    roots.push_back(root);
    lo = root + kMinGap;
  }
  return roots;
}

BesselRootTable::BesselRootTable(int max_order, int max_root)
    : max_order_(max_order), max_root_(max_root) {
  if (max_order < 0 || max_root < 1) {
    throw InputDomainError("root table needs max_order >= 0 and max_root >= 1");
  }
  roots_.reserve(static_cast<std::size_t>(max_order + 1) * max_root);
  for (int n = 0; n <= max_order; ++n) {
    const auto row = bessel_roots(n, max_root);
    roots_.insert(roots_.end(), row.begin(), row.end());
  }
}

void BesselRootTable::write_csv(std::ostream& out) const {
  const auto old_precision = out.precision(15);
  for (int n = 0; n <= max_order_; ++n) {
    for (int i = 1; i <= max_root_; ++i) {
      if (i > 1) out << ',';
      out << root(n, i);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

BesselRootTable build_root_table(int max_order, int max_root) {
  return BesselRootTable(max_order, max_root);
}

}  // namespace polarfreq
