#include "coefmult/seqspec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coefmult {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Compensated (Kahan) accumulator for long partial sums.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

TailRule TailRule::zero() { return TailRule{}; }

TailRule TailRule::constant(double c) {
  require(std::isfinite(c) && c >= 0.0, "TailRule::constant: need c >= 0");
  TailRule r;
  r.kind_ = Kind::Constant;
  r.c_ = c;
  return r;
}

TailRule TailRule::geometric(double c, double rho) {
  require(std::isfinite(c) && c >= 0.0, "TailRule::geometric: need c >= 0");
  require(rho > 0.0 && rho < 1.0, "TailRule::geometric: need rho in (0,1)");
  TailRule r;
  r.kind_ = Kind::Geometric;
  r.c_ = c;
  r.rho_ = rho;
  return r;
}

TailRule TailRule::power(double c, double a) {
  require(std::isfinite(c) && c >= 0.0, "TailRule::power: need c >= 0");
  require(std::isfinite(a) && a > 0.0, "TailRule::power: need exponent a > 0");
  TailRule r;
  r.kind_ = Kind::Power;
  r.c_ = c;
  r.exponent_ = a;
  return r;
}

TailRule TailRule::periodic(std::vector<double> pattern) {
  require(!pattern.empty(), "TailRule::periodic: pattern must be non-empty");
  for (double v : pattern)
    require(std::isfinite(v), "TailRule::periodic: pattern entries must be finite");
  TailRule r;
  r.kind_ = Kind::Periodic;
  r.pattern_ = std::move(pattern);
  for (double v : r.pattern_) r.pattern_max_abs_ = std::max(r.pattern_max_abs_, std::fabs(v));
  return r;
}

double TailRule::value(std::size_t k) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Constant: return c_;
    case Kind::Geometric: return c_ * std::pow(rho_, static_cast<double>(k));
    case Kind::Power: return c_ * std::pow(static_cast<double>(k) + 1.0, -exponent_);
    case Kind::Periodic: return pattern_[k % pattern_.size()];
  }
  return 0.0;
}

double TailRule::sup_abs_from(std::size_t k) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Constant: return c_;
    // Decreasing rules attain the tail sup at the first offset.
    case Kind::Geometric: return c_ * std::pow(rho_, static_cast<double>(k));
    case Kind::Power: return c_ * std::pow(static_cast<double>(k) + 1.0, -exponent_);
    // Every residue class recurs beyond any offset.
    case Kind::Periodic: return pattern_max_abs_;
  }
  return 0.0;
}

double TailRule::limsup_abs() const {
  switch (kind_) {
    case Kind::Zero:
    case Kind::Geometric:
    case Kind::Power: return 0.0;
    case Kind::Constant: return c_;
    case Kind::Periodic: return pattern_max_abs_;
  }
  return 0.0;
}

bool TailRule::vanishes() const {
  switch (kind_) {
    case Kind::Zero: return true;
    case Kind::Constant:
    case Kind::Geometric:
    case Kind::Power: return c_ == 0.0;
    case Kind::Periodic: return pattern_max_abs_ == 0.0;
  }
  return true;
}

Interval TailRule::abs_power_sum_from(std::size_t k, double p, const SumConfig& cfg) const {
  switch (kind_) {
    case Kind::Zero:
      return Interval::exact(0.0);

    case Kind::Constant:
      return c_ == 0.0 ? Interval::exact(0.0) : Interval::infinite();

    case Kind::Periodic:
      return pattern_max_abs_ == 0.0 ? Interval::exact(0.0) : Interval::infinite();

    case Kind::Geometric: {
      if (c_ == 0.0) return Interval::exact(0.0);
      // sum_{j >= k} (c rho^j)^p = c^p rho^(pk) / (1 - rho^p), closed form.
      const double rp = std::pow(rho_, p);
      const double head = std::pow(c_, p) * std::pow(rho_, p * static_cast<double>(k));
      return Interval::exact(head / (1.0 - rp));
    }

    case Kind::Power: {
      if (c_ == 0.0) return Interval::exact(0.0);
      const double s = exponent_ * p;
      if (s <= 1.0) return Interval::infinite();
      // Partial sum over [k, N) plus the integral-test enclosure of the
      // remainder: I <= sum_{j >= N} (j+1)^(-s) <= (N+1)^(-s) + I with
      // I = (N+1)^(1-s) / (s-1). Grow N until the enclosure is tight on the
      // norm scale or the term budget runs out.
      const double cp = std::pow(c_, p);
      KahanSum partial;
      std::size_t n = k;
      std::size_t chunk = 64;
      const std::size_t budget_end = k + cfg.max_terms;
      while (true) {
        const std::size_t end = std::min(n + chunk, budget_end);
        for (; n < end; ++n)
          partial.add(std::pow(static_cast<double>(n) + 1.0, -s));
        const double np1 = static_cast<double>(n) + 1.0;
        const double integral = std::pow(np1, 1.0 - s) / (s - 1.0);
        const double first_term = std::pow(np1, -s);
        const Interval sum{cp * (partial.sum + integral),
                           cp * (partial.sum + integral + first_term)};
        const Interval norm = root(sum, p);
        if (norm.width() <= cfg.tolerance || n >= budget_end) return sum;
        chunk *= 2;
      }
    }
  }
  return Interval::exact(0.0);
}

TailRule TailRule::scaled(double t) const {
  const double s = std::fabs(t);
  TailRule r = *this;
  r.c_ *= s;
  if (kind_ == Kind::Periodic) {
    for (double& v : r.pattern_) v *= t;
    r.pattern_max_abs_ *= s;
  }
  return r;
}

SequenceSpec::SequenceSpec(std::vector<Complex> prefix, TailRule tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (const Complex& v : prefix_)
    require(std::isfinite(v.real()) && std::isfinite(v.imag()),
            "SequenceSpec: prefix entries must be finite");
}

SequenceSpec SequenceSpec::finite(std::vector<Complex> values) {
  return SequenceSpec(std::move(values), TailRule::zero());
}

SequenceSpec SequenceSpec::finite_real(const std::vector<double>& values) {
  std::vector<Complex> prefix(values.begin(), values.end());
  return SequenceSpec(std::move(prefix), TailRule::zero());
}

SequenceSpec SequenceSpec::of_tail(TailRule tail) {
  return SequenceSpec({}, std::move(tail));
}

SequenceSpec SequenceSpec::basis(std::size_t n) {
  std::vector<Complex> prefix(n + 1, Complex{0.0, 0.0});
  prefix[n] = Complex{1.0, 0.0};
  return finite(std::move(prefix));
}

Complex SequenceSpec::eval(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return Complex{tail_.value(n - prefix_.size()), 0.0};
}

double SequenceSpec::abs(std::size_t n) const { return std::abs(eval(n)); }

double SequenceSpec::limsup_abs() const { return tail_.limsup_abs(); }

double SequenceSpec::tail_sup_abs(std::size_t n) const {
  const std::size_t len = prefix_.size();
  double sup = 0.0;
  if (n + 1 < len) {
    for (std::size_t k = n + 1; k < len; ++k) sup = std::max(sup, std::abs(prefix_[k]));
    return std::max(sup, tail_.sup_abs_from(0));
  }
  return tail_.sup_abs_from(n + 1 - len);
}

double SequenceSpec::sup_abs() const {
  double sup = tail_.sup_abs_from(0);
  for (const Complex& v : prefix_) sup = std::max(sup, std::abs(v));
  return sup;
}

Interval SequenceSpec::lp_norm(double p, const SumConfig& cfg) const {
  require(!std::isnan(p) && p >= 1.0, "lp_norm: need p in [1, inf]");
  if (is_inf(p)) return Interval::exact(sup_abs());
  KahanSum head;
  for (const Complex& v : prefix_) head.add(std::pow(std::abs(v), p));
  const Interval tail = tail_.abs_power_sum_from(0, p, cfg);
  if (!tail.finite()) return Interval::infinite();
  return root({head.sum + tail.lo, head.sum + tail.hi}, p);
}

Interval SequenceSpec::tail_lp_norm(double p, std::size_t n, const SumConfig& cfg) const {
  require(!std::isnan(p) && p >= 1.0, "tail_lp_norm: need p in [1, inf]");
  if (is_inf(p)) return Interval::exact(tail_sup_abs(n));
  const std::size_t len = prefix_.size();
  KahanSum head;
  std::size_t offset = 0;
  if (n + 1 < len) {
    for (std::size_t k = n + 1; k < len; ++k) head.add(std::pow(std::abs(prefix_[k]), p));
  } else {
    offset = n + 1 - len;
  }
  const Interval tail = tail_.abs_power_sum_from(offset, p, cfg);
  if (!tail.finite()) return Interval::infinite();
  return root({head.sum + tail.lo, head.sum + tail.hi}, p);
}

SequenceSpec SequenceSpec::truncate(std::size_t count) const {
  std::vector<Complex> prefix(count);
  for (std::size_t k = 0; k < count; ++k) prefix[k] = eval(k);
  return finite(std::move(prefix));
}

SequenceSpec SequenceSpec::scaled(double t) const {
  SequenceSpec s = *this;
  for (Complex& v : s.prefix_) v *= t;
  s.tail_ = tail_.scaled(t);
  return s;
}

}  // namespace coefmult
