#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capfre {

enum class ScaleKind { FiniteChain, UnitInterval };

inline constexpr double kDefaultTolerance = 1e-9;

// The evaluation lattice L: either a finite chain 0 = l_1 < ... < l_k = 1 or [0,1].
// Membership on a chain is exact; the tolerance is only for comparing derived
// quantities (halving and subtraction in the Chebyshev routines).
class Scale {
 public:
  Scale() = default;

  static Scale unit_interval(double tolerance = kDefaultTolerance) {
    Scale s;
    s.kind_ = ScaleKind::UnitInterval;
    s.set_tolerance(tolerance);
    return s;
  }

  static Scale finite_chain(std::vector<double> levels, double tolerance = kDefaultTolerance) {
    if (levels.size() < 2) throw std::invalid_argument("finite chain needs at least two levels");
    if (levels.front() != 0.0 || levels.back() != 1.0) {
      throw std::invalid_argument("finite chain must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
      if (!(levels[i - 1] < levels[i])) {
        throw std::invalid_argument("finite chain levels must be strictly increasing");
      }
    }
    Scale s;
    s.kind_ = ScaleKind::FiniteChain;
    s.levels_ = std::move(levels);
    s.set_tolerance(tolerance);
    return s;
  }

  // Levels l / steps for l = 0..steps. Division keeps each level the double
  // nearest to its decimal spelling, so "0.15" parsed from text is a member.
  static Scale uniform_chain(int steps, double tolerance = kDefaultTolerance) {
    if (steps < 1) throw std::invalid_argument("uniform chain needs at least one step");
    std::vector<double> levels(static_cast<std::size_t>(steps) + 1);
    for (int l = 0; l <= steps; ++l) levels[l] = static_cast<double>(l) / steps;
    return finite_chain(std::move(levels), tolerance);
  }

  ScaleKind kind() const { return kind_; }
  bool is_chain() const { return kind_ == ScaleKind::FiniteChain; }
  const std::vector<double>& levels() const { return levels_; }
  double tolerance() const { return tolerance_; }

  Scale with_tolerance(double tolerance) const {
    Scale s = *this;
    s.set_tolerance(tolerance);
    return s;
  }

  std::optional<std::size_t> index_of(double v) const {
    if (!is_chain()) return std::nullopt;
    auto it = std::lower_bound(levels_.begin(), levels_.end(), v);
    if (it == levels_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - levels_.begin());
  }

  bool contains(double v) const {
    if (std::isnan(v)) return false;
    if (is_chain()) return index_of(v).has_value();
    return v >= 0.0 && v <= 1.0;
  }

  void require(double v, const std::string& what) const {
    if (!contains(v)) {
      throw std::domain_error(what + " = " + std::to_string(v) + " is not on the scale");
    }
  }

  bool approx_equal(double a, double b) const { return std::abs(a - b) <= tolerance_; }

  friend bool operator==(const Scale& a, const Scale& b) {
    return a.kind_ == b.kind_ && a.levels_ == b.levels_ && a.tolerance_ == b.tolerance_;
  }

 private:
  void set_tolerance(double tolerance) {
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    tolerance_ = tolerance;
  }

  ScaleKind kind_ = ScaleKind::UnitInterval;
  std::vector<double> levels_;
  double tolerance_ = kDefaultTolerance;
};

// Order-reversing involution of the scale: l_i -> l_{k-i+1} on a chain, t -> 1 - t on [0,1].
inline double iota(const Scale& scale, double v) {
  if (scale.is_chain()) {
    auto idx = scale.index_of(v);
    if (!idx) throw std::domain_error("iota: " + std::to_string(v) + " is not on the scale");
    const auto& lv = scale.levels();
    return lv[lv.size() - 1 - *idx];
  }
  scale.require(v, "iota argument");
  return 1.0 - v;
}

}  // namespace capfre
