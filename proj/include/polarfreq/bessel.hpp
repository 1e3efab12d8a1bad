#pragma once

#include <iosfwd>
#include <vector>

namespace polarfreq {

/// Bessel function of the first kind J_n(x) for integer n >= 0, x >= 0.
///
/// Small arguments (x <= 12) use the defining power series directly.
/// Larger arguments use Miller's downward recurrence normalized with the
/// identity J_0 + 2 * sum_k J_2k = 1, which stays accurate to ~1e-15
/// absolute where the series would lose everything to cancellation.
///
/// Throws InputDomainError for n < 0, x < 0 or non-finite x.
double bessel_j(int n, double x);

/// First `count` positive zeros of J_n in increasing order. Each zero is
/// bracketed by a sign-change scan and bisected until |J_n| < 1e-10.
std::vector<double> bessel_roots(int n, int count);

/// Immutable table of zeros alpha[n][i] for n in [0, max_order] and
/// i in [1, max_root].
class BesselRootTable {
public:
  BesselRootTable() = default;
  BesselRootTable(int max_order, int max_root);

  int max_order() const noexcept { return max_order_; }
  int max_root() const noexcept { return max_root_; }

  /// i is 1-based, matching the usual alpha_{n,i} indexing.
  double root(int order, int i) const {
    return roots_[static_cast<std::size_t>(order) * max_root_ + (i - 1)];
  }

  bool covers(int max_order, int max_root) const noexcept {
    return max_order <= max_order_ && max_root <= max_root_;
  }

  /// One row per order, one column per root, 15 significant digits.
  void write_csv(std::ostream& out) const;

private:
  int max_order_ = -1;
  int max_root_ = 0;
  std::vector<double> roots_;
};

BesselRootTable build_root_table(int max_order, int max_root);

}  // namespace polarfreq
