#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace coefmult {

/// Closed enclosure [lo, hi] of a nonnegative scalar quantity.
///
/// Enclosure widths come from analytic remainder bounds (integral tests,
/// geometric tail sums); floating-point rounding is not tracked outward.
/// lo == hi == +infinity marks a quantity that provably diverges.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }

  static Interval infinite() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }

  bool finite() const { return std::isfinite(hi); }
  double width() const { return lo == hi ? 0.0 : hi - lo; }
  double midpoint() const { return lo == hi ? lo : 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }

  Interval scaled(double t) const {
    const double s = std::fabs(t);
    return {lo * s, hi * s};
  }
};

inline Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

/// Elementwise x^(1/p); valid because both endpoints are nonnegative and
/// t -> t^(1/p) is monotone.
inline Interval root(const Interval& x, double p) {
  if (!x.finite()) return Interval::infinite();
  const double inv = 1.0 / p;
  return {std::pow(x.lo, inv), std::pow(x.hi, inv)};
}

}  // namespace coefmult
