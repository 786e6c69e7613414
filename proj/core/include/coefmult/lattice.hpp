#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coefmult/seqspec.hpp"

namespace coefmult {

/// Descriptor of the sequence lattice l_p, 1 <= p <= inf.
///
/// Structural facts are theorems about l_p and are derived from p, never
/// sampled: l_p is order-continuous iff p < inf, satisfies upper and lower
/// p-estimates with constant 1, and is p-concave with constant 1 (p < inf).
struct SpaceDescriptor {
  double p = 2.0;

  static SpaceDescriptor lp(double p);

  bool order_continuous() const { return std::isfinite(p); }
  double upper_estimate_exponent() const { return p; }
  double lower_estimate_exponent() const { return p; }
  double concavity_exponent() const { return p; }

  bool operator==(const SpaceDescriptor&) const = default;
};

/// Continuous-inclusion facts for l_p into l_q: holds iff p <= q, with
/// constant 1.
struct EmbeddingFacts {
  SpaceDescriptor source;
  SpaceDescriptor target;
  bool holds = false;
  double constant = 1.0;
};

EmbeddingFacts embedding(const SpaceDescriptor& source, const SpaceDescriptor& target);

/// Lattice norm of x in E; delegates to the lp machinery.
Interval space_norm(const SequenceSpec& x, const SpaceDescriptor& E,
                    const SumConfig& cfg = {});

/// p-convexification: (l_q)^(p) = l_{pq}, since ||{|x_n|^p}||_q^(1/p) is the
/// l_{pq} norm. p = 1 is the identity; requires p >= 1.
SpaceDescriptor convexify(const SpaceDescriptor& E, double p);

/// Log-spaced index grid 0..max_index used for truncation curves; always
/// contains max_index.
std::vector<std::size_t> truncation_grid(std::size_t max_index);

/// Evidence that tail projections of x vanish (or fail to) in E.
struct OrderContinuityReport {
  SpaceDescriptor space;
  bool space_order_continuous = false;
  /// (n, upper bound on ||(I - P_n) x||_E), nonincreasing in n.
  std::vector<std::pair<std::size_t, double>> tail_norms;
  /// Exact limit of the tail norms: 0 when E is order-continuous (and
  /// x in E), limsup |x_n| for l_inf.
  double symbolic_limit = 0.0;
  /// True when the tail norms decay to 0.
  bool decays_to_zero = false;
};

/// Tail-projection decay of x in E on a truncation grid. Throws
/// std::domain_error when x is not in E.
OrderContinuityReport check_order_continuity(const SpaceDescriptor& E, const SequenceSpec& x,
                                             std::size_t max_index = 10000,
                                             const SumConfig& cfg = {});

/// Both sides of the upper and lower p-estimate inequalities, evaluated with
/// constant 1 and p = E.p on pairwise disjointly supported vectors.
struct PEstimateReport {
  double p = 2.0;
  /// ||x_1 + ... + x_k||_E.
  double combined_norm = 0.0;
  /// (sum_i ||x_i||_E^p)^(1/p), or max_i ||x_i||_E for p = inf.
  double norm_aggregate = 0.0;
  bool upper_holds = false;
  bool lower_holds = false;
  /// combined_norm - norm_aggregate; 0 for l_p with disjoint supports.
  double slack = 0.0;
};

/// Evaluates the p-estimate inequalities for finitely supported, pairwise
/// disjoint vectors. Throws std::invalid_argument when supports overlap or a
/// vector is not finitely supported.
PEstimateReport verify_p_estimates(const SpaceDescriptor& E,
                                   const std::vector<SequenceSpec>& vectors);

}  // namespace coefmult
