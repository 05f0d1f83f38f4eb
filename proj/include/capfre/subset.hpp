#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace capfre {

// Subsets of the criteria set C = {1,...,n} are bitmasks: criterion i is bit i-1.
// Ascending mask order is the canonical order for capacities and matrix columns.
using Mask = std::uint32_t;

inline constexpr int kMaxCriteria = 24;

inline void check_criteria_count(int n) {
  if (n < 1 || n > kMaxCriteria) {
    throw std::invalid_argument("criteria count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxCriteria) + "]");
  }
}

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

constexpr std::size_t subset_count(int n) { return std::size_t{1} << n; }

constexpr int cardinality(Mask a) { return std::popcount(a); }

constexpr Mask complement(Mask a, int n) { return full_mask(n) ^ a; }

constexpr bool contains(Mask a, int bit) { return (a >> bit) & 1u; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls fn(bit) for every element of `a`, lowest first.
template <class Fn>
constexpr void for_each_element(Mask a, Fn&& fn) {
  while (a != 0) {
    fn(std::countr_zero(a));
    a &= a - 1;
  }
}

// All masks of the given cardinality over n criteria, ascending (Gosper's hack).
inline std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask limit = full_mask(n);
  Mask s = full_mask(k);
  while (s <= limit) {
    out.push_back(s);
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

// "{1,3}" style rendering with 1-based criteria.
inline std::string format_subset(Mask a) {
  std::string out = "{";
  bool first = true;
  for_each_element(a, [&](int bit) {
    if (!first) out += ',';
    out += std::to_string(bit + 1);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace capfre
