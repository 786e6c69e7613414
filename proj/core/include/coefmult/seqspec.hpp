#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "coefmult/interval.hpp"

namespace coefmult {

using Complex = std::complex<double>;

/// Controls the adaptive enclosure of infinite series.
struct SumConfig {
  /// Target enclosure width on the norm scale (after the p-th root).
  double tolerance = 1e-6;
  /// Partial-sum budget; when exhausted the (wider) honest enclosure is
  /// returned instead of iterating further.
  std::size_t max_terms = std::size_t{1} << 22;
};

/// Symbolic tail of a sequence, one of five families. Each family admits
/// exact evaluation at any offset, exact sup/limsup of absolute values over
/// any tail, and certified enclosures of lp power sums.
///
/// Offsets are relative: a rule attached to a SequenceSpec with prefix
/// length L describes indices L, L+1, ... via offsets 0, 1, ...
class TailRule {
 public:
  enum class Kind { Zero, Constant, Geometric, Power, Periodic };

  /// Identically zero tail.
  static TailRule zero();
  /// value(k) = c, c >= 0.
  static TailRule constant(double c);
  /// value(k) = c * rho^k with c >= 0 and rho strictly inside (0, 1).
  static TailRule geometric(double c, double rho);
  /// value(k) = c * (k+1)^(-a) with c >= 0 and a > 0.
  static TailRule power(double c, double a);
  /// value(k) = pattern[k mod pattern.size()], pattern non-empty. Signs are
  /// kept by value() but every asymptotic quantity uses |pattern|.
  static TailRule periodic(std::vector<double> pattern);

  Kind kind() const { return kind_; }
  double coefficient() const { return c_; }
  double ratio() const { return rho_; }
  double exponent() const { return exponent_; }
  const std::vector<double>& pattern() const { return pattern_; }

  double value(std::size_t k) const;
  double sup_abs_from(std::size_t k) const;
  double limsup_abs() const;
  bool vanishes() const;

  /// Certified enclosure of sum_{j >= k} |value(j)|^p for finite p >= 1.
  /// Geometric tails use the closed-form series; Power tails use partial
  /// sums plus integral-test remainder bounds, declaring divergence when
  /// a*p <= 1; Constant/Periodic tails diverge unless identically zero.
  Interval abs_power_sum_from(std::size_t k, double p, const SumConfig& cfg) const;

  TailRule scaled(double t) const;

  bool operator==(const TailRule&) const = default;

 private:
  TailRule() = default;

  Kind kind_ = Kind::Zero;
  double c_ = 0.0;
  double rho_ = 0.0;
  double exponent_ = 0.0;
  std::vector<double> pattern_;
  double pattern_max_abs_ = 0.0;
};

/// An infinite scalar sequence over indices 0, 1, 2, ...: a finite (possibly
/// complex) prefix followed by a symbolic TailRule from index prefix().size()
/// onward.
///
/// Immutable after construction; all operations are pure functions, safe for
/// unrestricted concurrent use.
class SequenceSpec {
 public:
  /// The zero sequence.
  SequenceSpec() : tail_(TailRule::zero()) {}
  SequenceSpec(std::vector<Complex> prefix, TailRule tail);

  /// Finitely supported sequence: the given values, then zeros.
  static SequenceSpec finite(std::vector<Complex> values);
  static SequenceSpec finite_real(const std::vector<double>& values);
  /// Pure tail rule with empty prefix.
  static SequenceSpec of_tail(TailRule tail);
  /// The standard basis vector e_n.
  static SequenceSpec basis(std::size_t n);

  const std::vector<Complex>& prefix() const { return prefix_; }
  const TailRule& tail() const { return tail_; }

  Complex eval(std::size_t n) const;
  double abs(std::size_t n) const;

  /// Exact limsup_{n -> inf} |s(n)|.
  double limsup_abs() const;
  /// Exact sup_{k > n} |s(k)|; nonincreasing in n with limit limsup_abs().
  double tail_sup_abs(std::size_t n) const;
  /// Exact sup_{k >= 0} |s(k)|.
  double sup_abs() const;

  /// Certified enclosure of the lp norm for p in [1, inf]; p == inf returns
  /// the exact sup. Throws std::invalid_argument for p < 1 or NaN.
  Interval lp_norm(double p, const SumConfig& cfg = {}) const;
  /// Certified enclosure of ||(I - P_n) s||_p, the lp norm over indices
  /// k > n.
  Interval tail_lp_norm(double p, std::size_t n, const SumConfig& cfg = {}) const;

  /// First `count` entries, then zeros. Agrees with eval on indices < count.
  SequenceSpec truncate(std::size_t count) const;
  /// Entrywise t * s; the tail rule is scaled by |t|.
  SequenceSpec scaled(double t) const;

  bool operator==(const SequenceSpec&) const = default;

 private:
  std::vector<Complex> prefix_;
  TailRule tail_;
};

/// True when p encodes the sup norm.
inline bool is_inf(double p) { return std::isinf(p); }

}  // namespace coefmult
