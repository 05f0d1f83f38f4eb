#pragma once

// Shared fixtures, random generators and brute-force checkers for the test
// suites. Nothing here calls into the routines it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "capfre/capfre.hpp"

namespace capfre::testing {

// Three criteria, three items, on the chain {0, 0.05, ..., 1}.
inline TrainingSet three_criteria_data(double alpha2 = 0.3) {
  return TrainingSet(3, Scale::uniform_chain(20),
                     {{{0.15, 0.2, 0.3}, 0.2}, {{0.5, 0.25, 0.3}, alpha2}, {{0.4, 0.7, 0.35}, 0.4}});
}

// Masks ordered by cardinality, then lexicographically by their elements:
// {1},{2},{3},{1,2},{1,3},{2,3},{1,2,3} for n = 3.
inline std::vector<Mask> cardinality_order(int n, bool with_empty = false) {
  std::vector<Mask> out;
  for (Mask a = with_empty ? 0 : 1; a <= full_mask(n); ++a) out.push_back(a);
  auto elements = [](Mask a) {
    std::vector<int> e;
    for_each_element(a, [&](int i) { e.push_back(i); });
    return e;
  };
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return elements(a) < elements(b);
  });
  return out;
}

// Capacity values in canonical mask order for n = 3:
//   index: {} {1} {2} {1,2} {3} {1,3} {2,3} C
inline std::vector<double> greatest_capacity_values() { return {0, 0.3, 0.4, 1, 0.2, 1, 1, 1}; }
inline std::vector<double> lowest_capacity_values() { return {0, 0, 0, 0.4, 0, 0.3, 0.2, 1}; }

inline Capacity greatest_capacity() { return Capacity(3, Scale::uniform_chain(20), greatest_capacity_values()); }
inline Capacity lowest_capacity() { return Capacity(3, Scale::uniform_chain(20), lowest_capacity_values()); }

// ---------------------------------------------------------------------------
// Random generators on the chain l / steps.

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform_int(0, 1) == 1; }

  double level(int steps) { return static_cast<double>(uniform_int(0, steps)) / steps; }

  // A level at or above `lo` (which must itself be a level).
  double level_at_least(double lo, int steps) {
    const int from = static_cast<int>(lo * steps + 0.5);
    return static_cast<double>(uniform_int(from, steps)) / steps;
  }

  std::vector<double> object(int n, int steps) {
    std::vector<double> x(n);
    for (auto& v : x) v = level(steps);
    return x;
  }

  // Monotone set function built bottom-up; proper subsets are biased toward
  // their lower bound now and then so that ties and plateaus show up.
  Capacity capacity(int n, int steps) {
    std::vector<double> v(subset_count(n), 0.0);
    for (Mask a = 1; a < full_mask(n); ++a) {
      double lo = 0.0;
      for_each_element(a, [&](int i) { lo = std::max(lo, v[a & ~(Mask{1} << i)]); });
      v[a] = uniform_int(0, 3) == 0 ? lo : level_at_least(lo, steps);
    }
    v[full_mask(n)] = 1.0;
    return Capacity(n, Scale::uniform_chain(steps), std::move(v));
  }

  // q-maxitive capacity: random monotone values on |X| <= q with some size-q
  // subset at 1, closed upward by max.
  Capacity q_maxitive_capacity(int n, int q, int steps) {
    const auto base = capacity(n, steps);
    std::vector<double> v(base.values().begin(), base.values().end());
    const auto top = subsets_of_size(n, q);
    v[top[uniform_int(0, static_cast<int>(top.size()) - 1)]] = 1.0;
    // restore monotonicity on the low layers after raising one subset
    for (Mask a = 1; a <= full_mask(n); ++a) {
      for_each_element(a, [&](int i) { v[a] = std::max(v[a], v[a & ~(Mask{1} << i)]); });
    }
    for (Mask a = 1; a <= full_mask(n); ++a) {
      if (cardinality(a) <= q) continue;
      double m = 0.0;
      for (Mask y = (a - 1) & a; y != 0; y = (y - 1) & a) {
        if (cardinality(y) <= q) m = std::max(m, v[y]);
      }
      v[a] = m;
    }
    return Capacity(n, Scale::uniform_chain(steps), std::move(v));
  }

  Capacity q_minitive_capacity(int n, int q, int steps) {
    // conjugate of a q-maxitive capacity on a symmetric chain
    const auto mu = q_maxitive_capacity(n, q, steps);
    std::vector<double> v(subset_count(n));
    for (Mask a = 0; a <= full_mask(n); ++a) {
      v[a] = static_cast<double>(steps - static_cast<int>(mu[complement(a, n)] * steps + 0.5)) / steps;
    }
    return Capacity(n, Scale::uniform_chain(steps), std::move(v));
  }

  TrainingSet training_set(int n, int items, int steps) {
    std::vector<TrainingDatum> data;
    for (int k = 0; k < items; ++k) data.push_back({object(n, steps), level(steps)});
    return TrainingSet(n, Scale::uniform_chain(steps), std::move(data));
  }

  // Targets generated by a capacity, so the data is exactly representable.
  TrainingSet represented_by(const Capacity& mu, int items, int steps) {
    std::vector<TrainingDatum> data;
    for (int k = 0; k < items; ++k) {
      auto x = object(mu.n(), steps);
      const double alpha = brute_sugeno(mu, x);
      data.push_back({std::move(x), alpha});
    }
    return TrainingSet(mu.n(), Scale::uniform_chain(steps), std::move(data));
  }

  Matrix matrix(std::size_t rows, std::size_t cols, int steps) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = level(steps);
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

  // Direct max-min evaluation over explicit element lists.
  static double brute_sugeno(const Capacity& mu, const std::vector<double>& x) {
    double best = 0.0;
    for (Mask a = 1; a <= full_mask(mu.n()); ++a) {
      double m = 1.0;
      for (int i = 0; i < mu.n(); ++i) {
        if ((a >> i) & 1u) m = std::min(m, x[i]);
      }
      best = std::max(best, std::min(m, mu[a]));
    }
    return best;
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Brute-force checkers.

// O(4^n) pairwise monotonicity plus boundary conditions.
inline bool pairwise_is_capacity(const std::vector<double>& v, int n) {
  if (v[0] != 0.0 || v[full_mask(n)] != 1.0) return false;
  for (Mask a = 0; a <= full_mask(n); ++a) {
    for (Mask b = 0; b <= full_mask(n); ++b) {
      if ((a & ~b) == 0 && v[a] > v[b]) return false;
    }
  }
  return true;
}

// The q-maxitive definition by enumerating every subset Y of X.
inline bool definition_q_maxitive(const Capacity& mu, int q) {
  for (Mask x = 0; x <= full_mask(mu.n()); ++x) {
    if (cardinality(x) <= q) continue;
    double m = 0.0;
    for (Mask y = 0; y <= full_mask(mu.n()); ++y) {
      if (y != x && (y & ~x) == 0 && cardinality(y) <= q) m = std::max(m, mu[y]);
    }
    if (mu[x] != m) return false;
  }
  return true;
}

// The q-minitive definition by enumerating every superset Y of X.
inline bool definition_q_minitive(const Capacity& mu, int q) {
  const int n = mu.n();
  for (Mask x = 0; x <= full_mask(n); ++x) {
    if (cardinality(x) >= n - q) continue;
    double m = 1.0;
    for (Mask y = 0; y <= full_mask(n); ++y) {
      if (y != x && (x & ~y) == 0 && cardinality(y) >= n - q) m = std::min(m, mu[y]);
    }
    if (mu[x] != m) return false;
  }
  return true;
}

}  // namespace capfre::testing
