#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "capfre/capacity.hpp"

namespace capfre {

// Sugeno integral of an object x in L^n. Full evaluation visits all 2^n
// subsets with an O(n) inner loop, so keep n <= 20 in practice.

namespace detail {

inline void check_object(const Capacity& mu, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(mu.n())) {
    throw std::domain_error("object has " + std::to_string(x.size()) + " coordinates, capacity has " +
                            std::to_string(mu.n()) + " criteria");
  }
}

inline double min_over(Mask a, std::span<const double> x) {
  double m = 1.0;
  for_each_element(a, [&](int i) { m = std::min(m, x[i]); });
  return m;
}

inline double max_over(Mask a, std::span<const double> x) {
  double m = 0.0;
  for_each_element(a, [&](int i) { m = std::max(m, x[i]); });
  return m;
}

}  // namespace detail

// max_A min(min_{i in A} x_i, mu(A)); the empty set contributes mu({}) = 0.
inline double sugeno_maxmin(const Capacity& mu, std::span<const double> x) {
  detail::check_object(mu, x);
  double acc = 0.0;
  for (Mask a = 1; a <= full_mask(mu.n()); ++a) {
    acc = std::max(acc, std::min(detail::min_over(a, x), mu[a]));
  }
  return acc;
}

// min_A max(max_{i not in A} x_i, mu(A)).
inline double sugeno_minmax(const Capacity& mu, std::span<const double> x) {
  detail::check_object(mu, x);
  const int n = mu.n();
  double acc = 1.0;
  for (Mask a = 0; a <= full_mask(n); ++a) {
    acc = std::min(acc, std::max(detail::max_over(complement(a, n), x), mu[a]));
  }
  return acc;
}

// Reduced forms for q-maxitive / q-minitive capacities. The unchecked variants
// skip the structural test; on other capacities they return the reduced
// expression, which then need not equal the integral.

inline double sugeno_qmax_unchecked(const Capacity& mu, std::span<const double> x, int q) {
  detail::check_object(mu, x);
  check_q(q, mu.n());
  double acc = 0.0;
  for (Mask a = 1; a <= full_mask(mu.n()); ++a) {
    if (cardinality(a) > q) continue;
    acc = std::max(acc, std::min(detail::min_over(a, x), mu[a]));
  }
  return acc;
}

inline double sugeno_qmin_unchecked(const Capacity& mu, std::span<const double> x, int q) {
  detail::check_object(mu, x);
  check_q(q, mu.n());
  const int n = mu.n();
  double acc = 1.0;
  for (Mask a = 0; a < full_mask(n); ++a) {
    if (cardinality(a) < n - q) continue;
    acc = std::min(acc, std::max(detail::max_over(complement(a, n), x), mu[a]));
  }
  return acc;
}

inline double sugeno_qmax(const Capacity& mu, std::span<const double> x, int q) {
  check_q(q, mu.n());
  if (!is_q_maxitive(mu, q)) {
    throw std::domain_error("capacity is not " + std::to_string(q) + "-maxitive");
  }
  return sugeno_qmax_unchecked(mu, x, q);
}

inline double sugeno_qmin(const Capacity& mu, std::span<const double> x, int q) {
  check_q(q, mu.n());
  if (!is_q_minitive(mu, q)) {
    throw std::domain_error("capacity is not " + std::to_string(q) + "-minitive");
  }
  return sugeno_qmin_unchecked(mu, x, q);
}

}  // namespace capfre
