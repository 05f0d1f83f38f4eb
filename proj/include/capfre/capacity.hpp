#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capfre/scale.hpp"
#include "capfre/subset.hpp"

namespace capfre {

struct CapacityViolation {
  enum class Kind { EmptyNotZero, FullNotOne, OffScale, NotMonotone };
  Kind kind;
  Mask smaller = 0;  // the offending subset (or the smaller side of a covering pair)
  Mask larger = 0;   // the larger side of a covering pair, NotMonotone only
};

inline std::string describe(const CapacityViolation& v) {
  switch (v.kind) {
    case CapacityViolation::Kind::EmptyNotZero:
      return "value of {} is not 0";
    case CapacityViolation::Kind::FullNotOne:
      return "value of C is not 1";
    case CapacityViolation::Kind::OffScale:
      return "value of " + format_subset(v.smaller) + " is not on the scale";
    case CapacityViolation::Kind::NotMonotone:
      return "value of " + format_subset(v.smaller) + " exceeds value of " +
             format_subset(v.larger);
  }
  return "unknown violation";
}

// Every violated condition, not only the first. Monotonicity is checked on the
// n * 2^(n-1) covering pairs (A, A + {i}), which implies it on all pairs.
inline std::vector<CapacityViolation> capacity_violations(std::span<const double> values, int n,
                                                          const Scale& scale) {
  check_criteria_count(n);
  if (values.size() != subset_count(n)) {
    throw std::invalid_argument("set function has " + std::to_string(values.size()) +
                                " entries, expected " + std::to_string(subset_count(n)));
  }
  using Kind = CapacityViolation::Kind;
  std::vector<CapacityViolation> out;
  const Mask full = full_mask(n);
  if (values[0] != 0.0) out.push_back({Kind::EmptyNotZero, 0, 0});
  if (values[full] != 1.0) out.push_back({Kind::FullNotOne, full, 0});
  for (Mask a = 0; a <= full; ++a) {
    if (!scale.contains(values[a])) out.push_back({Kind::OffScale, a, 0});
  }
  for (Mask a = 0; a <= full; ++a) {
    for (int i = 0; i < n; ++i) {
      if (contains(a, i)) continue;
      const Mask b = a | (Mask{1} << i);
      if (values[a] > values[b]) out.push_back({Kind::NotMonotone, a, b});
    }
  }
  return out;
}

inline bool is_capacity(std::span<const double> values, int n, const Scale& scale) {
  return capacity_violations(values, n, scale).empty();
}

class CapacityError : public std::invalid_argument {
 public:
  explicit CapacityError(std::vector<CapacityViolation> violations)
      : std::invalid_argument(summary(violations)), violations_(std::move(violations)) {}

  const std::vector<CapacityViolation>& violations() const { return violations_; }

 private:
  static std::string summary(const std::vector<CapacityViolation>& vs) {
    std::string s = "not a capacity:";
    for (const auto& v : vs) s += "\n  " + describe(v);
    return s;
  }

  std::vector<CapacityViolation> violations_;
};

// A monotone set function 2^C -> L with mu({}) = 0 and mu(C) = 1, stored in
// canonical (ascending mask) order. Immutable once built.
class Capacity {
 public:
  Capacity(int n, Scale scale, std::vector<double> values)
      : n_(n), scale_(std::move(scale)), values_(std::move(values)) {
    auto violations = capacity_violations(values_, n_, scale_);
    if (!violations.empty()) throw CapacityError(std::move(violations));
  }

  int n() const { return n_; }
  const Scale& scale() const { return scale_; }
  std::span<const double> values() const { return values_; }
  double operator[](Mask a) const { return values_[a]; }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  Scale scale_;
  std::vector<double> values_;
};

// mu^c(A) = iota(mu(complement A)).
inline Capacity conjugate(const Capacity& mu) {
  const int n = mu.n();
  std::vector<double> out(subset_count(n));
  for (Mask a = 0; a <= full_mask(n); ++a) out[a] = iota(mu.scale(), mu[complement(a, n)]);
  return Capacity(n, mu.scale(), std::move(out));
}

inline void check_q(int q, int n) {
  if (q < 1 || q > n) {
    throw std::domain_error("q = " + std::to_string(q) + " outside [1, " + std::to_string(n) +
                            "]");
  }
}

// Fills the layer |X| > q with the max over nonempty Y in X with |Y| <= q of
// layer(Y); sets X = {} to 0. Entries with 0 < |X| <= q are copied from `layer`.
// Runs in O(n 2^n): every small subset of X sits inside X minus some element.
inline std::vector<double> maxitive_extension(std::span<const double> layer, int n, int q) {
  check_criteria_count(n);
  check_q(q, n);
  std::vector<double> out(subset_count(n));
  out[0] = 0.0;
  for (Mask x = 1; x <= full_mask(n); ++x) {
    if (cardinality(x) <= q) {
      out[x] = layer[x];
      continue;
    }
    double best = 0.0;
    for_each_element(x, [&](int i) { best = std::max(best, out[x & ~(Mask{1} << i)]); });
    out[x] = best;
  }
  return out;
}

// Dual of maxitive_extension: sets C to 1, copies n-q <= |X| < n, and fills
// |X| < n-q with the min over Y containing X with n-q <= |Y| < n.
inline std::vector<double> minitive_extension(std::span<const double> layer, int n, int q) {
  check_criteria_count(n);
  check_q(q, n);
  const Mask full = full_mask(n);
  std::vector<double> out(subset_count(n));
  out[full] = 1.0;
  for (Mask x = full; x-- > 0;) {
    if (cardinality(x) >= n - q) {
      out[x] = layer[x];
      continue;
    }
    double best = 1.0;
    for (int i = 0; i < n; ++i) {
      if (!contains(x, i)) best = std::min(best, out[x | (Mask{1} << i)]);
    }
    out[x] = best;
  }
  return out;
}

// mu(X) = max_{Y in X, |Y| <= q} mu(Y) for every |X| > q.
inline bool is_q_maxitive(const Capacity& mu, int q) {
  check_q(q, mu.n());
  const auto closure = maxitive_extension(mu.values(), mu.n(), q);
  return std::equal(closure.begin(), closure.end(), mu.values().begin());
}

// mu(X) = min_{Y containing X, |Y| >= n-q} mu(Y) for every |X| < n-q.
// Y = C may be left out of the min since mu(C) = 1 bounds every value.
inline bool is_q_minitive(const Capacity& mu, int q) {
  check_q(q, mu.n());
  const auto closure = minitive_extension(mu.values(), mu.n(), q);
  return std::equal(closure.begin(), closure.end(), mu.values().begin());
}

}  // namespace capfre
