#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capfre/capacity.hpp"
#include "capfre/learning.hpp"
#include "capfre/relational_system.hpp"

namespace capfre::oracle {

// Brute-force verifiers. Everything here enumerates a finite grid in a fixed
// order, so results are deterministic. Searches that would exceed the budget
// are refused up front rather than truncated.

inline constexpr double kDefaultBudget = 1e7;

struct QConstraint {
  enum class Kind { None, QMax, QMin };
  Kind kind = Kind::None;
  int q = 0;

  static QConstraint none() { return {}; }
  static QConstraint qmax(int q) { return {Kind::QMax, q}; }
  static QConstraint qmin(int q) { return {Kind::QMin, q}; }
};

struct GridSpec {
  std::vector<double> levels;  // ascending, contains 0 and 1
  int n = 1;
  QConstraint constraint;
  double budget = kDefaultBudget;

  // Levels l / steps, l = 0..steps.
  static GridSpec uniform(int steps, int n, QConstraint c = {}) {
    return {Scale::uniform_chain(steps).levels(), n, c};
  }

  Scale scale() const { return Scale::finite_chain(levels); }
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double budget)
      : std::runtime_error(what + ": estimated " + std::to_string(estimate) +
                           " candidates exceeds budget " + std::to_string(budget)),
        estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

namespace detail {

inline void check_budget(const char* what, double estimate, double budget) {
  if (estimate > budget) throw BudgetExceeded(what, estimate, budget);
}

inline void check_levels(const GridSpec& spec) {
  (void)spec.scale();  // validates 0 and 1 present, ascending
}

// Visits every vector in levels^len in lexicographic level order.
template <class Fn>
void for_each_grid_vector(const std::vector<double>& levels, std::size_t len, Fn&& fn) {
  std::vector<std::size_t> idx(len, 0);
  std::vector<double> v(len, levels.front());
  while (true) {
    fn(static_cast<const std::vector<double>&>(v));
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < levels.size()) {
        v[pos] = levels[idx[pos]];
        break;
      }
      idx[pos] = 0;
      v[pos] = levels.front();
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

inline bool satisfies(const Capacity& mu, const QConstraint& c) {
  switch (c.kind) {
    case QConstraint::Kind::None: return true;
    case QConstraint::Kind::QMax: return is_q_maxitive(mu, c.q);
    case QConstraint::Kind::QMin: return is_q_minitive(mu, c.q);
  }
  return false;
}

}  // namespace detail

// Upper bound on the number of set functions visited: levels^(2^n - 2).
inline double capacity_search_estimate(const GridSpec& spec) {
  return std::pow(static_cast<double>(spec.levels.size()),
                  static_cast<double>(subset_count(spec.n)) - 2.0);
}

// Every capacity with values on the grid, filtered by the q constraint.
// Backtracks over subsets in ascending mask order; each value starts at the
// max over the subset's immediate predecessors, which prunes non-monotone branches.
inline void enumerate_capacities(const GridSpec& spec, const std::function<void(const Capacity&)>& visit) {
  check_criteria_count(spec.n);
  detail::check_levels(spec);
  if (spec.constraint.kind != QConstraint::Kind::None) check_q(spec.constraint.q, spec.n);
  detail::check_budget("capacity enumeration", capacity_search_estimate(spec), spec.budget);

  const int n = spec.n;
  const Mask full = full_mask(n);
  const Scale scale = spec.scale();
  const auto& levels = spec.levels;
  std::vector<double> values(subset_count(n), 0.0);
  values[full] = 1.0;

  std::function<void(Mask)> assign = [&](Mask a) {
    if (a == full) {
      Capacity mu(n, scale, values);
      if (detail::satisfies(mu, spec.constraint)) visit(mu);
      return;
    }
    double lower = 0.0;
    for_each_element(a, [&](int i) { lower = std::max(lower, values[a & ~(Mask{1} << i)]); });
    for (double v : levels) {
      if (v < lower) continue;
      values[a] = v;
      assign(a + 1);
    }
  };
  assign(1);
}

inline std::vector<Capacity> collect_capacities(const GridSpec& spec) {
  std::vector<Capacity> out;
  enumerate_capacities(spec, [&](const Capacity& mu) { out.push_back(mu); });
  return out;
}

// Every vector in levels^m that solves the system exactly.
inline void enumerate_solutions(const RelationalSystem& sys, const GridSpec& spec,
                                const std::function<void(const SolutionVector&)>& visit) {
  detail::check_levels(spec);
  const double estimate =
      std::pow(static_cast<double>(spec.levels.size()), static_cast<double>(sys.unknowns()));
  detail::check_budget("solution enumeration", estimate, spec.budget);
  detail::for_each_grid_vector(spec.levels, sys.unknowns(), [&](const std::vector<double>& v) {
    if (apply_system(sys, v) == sys.rhs()) visit(v);
  });
}

inline std::vector<SolutionVector> collect_solutions(const RelationalSystem& sys, const GridSpec& spec) {
  std::vector<SolutionVector> out;
  enumerate_solutions(sys, spec, [&](const SolutionVector& v) { out.push_back(v); });
  return out;
}

// min over grid second members c, for which (matrix, c) is consistent, of ||rhs - c||_inf.
// Returns +inf if no grid vector is reachable.
inline double grid_chebyshev(const RelationalSystem& sys, const GridSpec& spec) {
  detail::check_levels(spec);
  const double estimate =
      std::pow(static_cast<double>(spec.levels.size()), static_cast<double>(sys.equations()));
  detail::check_budget("grid Chebyshev search", estimate, spec.budget);
  const Matrix& m = sys.matrix();
  const auto& rhs = sys.rhs();
  double best = std::numeric_limits<double>::infinity();
  detail::for_each_grid_vector(spec.levels, sys.equations(), [&](const std::vector<double>& c) {
    double dist = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) dist = std::max(dist, std::abs(rhs[i] - c[i]));
    if (dist >= best) return;
    const bool ok = sys.kind() == Composition::MaxMin ? maxmin_apply(m, godel_transpose(m, c)) == c
                                                      : minmax_apply(m, eps_transpose(m, c)) == c;
    if (ok) best = dist;
  });
  return best;
}

struct MinLearningError {
  double error = std::numeric_limits<double>::infinity();
  std::optional<Capacity> argmin;
};

// Smallest max_k |S_mu(x^(k)) - alpha^(k)| over grid capacities meeting the q constraint.
inline MinLearningError min_learning_error(const TrainingSet& ts, const GridSpec& spec) {
  if (spec.constraint.kind == QConstraint::Kind::None) {
    throw std::invalid_argument("min_learning_error needs a q-maxitive or q-minitive constraint");
  }
  if (spec.n != ts.n()) throw std::invalid_argument("grid and training set disagree on n");
  MinLearningError out;
  enumerate_capacities(spec, [&](const Capacity& mu) {
    const double err = learning_error(mu, ts);
    if (err < out.error) {
      out.error = err;
      out.argmin = mu;
    }
  });
  return out;
}

}  // namespace capfre::oracle
