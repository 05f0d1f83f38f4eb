#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capfre/capacity.hpp"
#include "capfre/chebyshev.hpp"
#include "capfre/relational_system.hpp"
#include "capfre/sugeno.hpp"

namespace capfre {

struct TrainingDatum {
  std::vector<double> x;  // partial evaluations x_1..x_n
  double alpha = 0.0;     // targeted global evaluation
};

class TrainingSet {
 public:
  TrainingSet(int n, Scale scale, std::vector<TrainingDatum> items)
      : n_(n), scale_(std::move(scale)), items_(std::move(items)) {
    check_criteria_count(n_);
    if (items_.empty()) throw std::invalid_argument("training set is empty");
    for (std::size_t k = 0; k < items_.size(); ++k) {
      const auto& item = items_[k];
      const std::string row = "item " + std::to_string(k + 1);
      if (item.x.size() != static_cast<std::size_t>(n_)) {
        throw std::domain_error(row + " has " + std::to_string(item.x.size()) +
                                " coordinates, expected " + std::to_string(n_));
      }
      for (int i = 0; i < n_; ++i) scale_.require(item.x[i], row + " x" + std::to_string(i + 1));
      scale_.require(item.alpha, row + " alpha");
    }
  }

  int n() const { return n_; }
  const Scale& scale() const { return scale_; }
  const std::vector<TrainingDatum>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const TrainingDatum& operator[](std::size_t k) const { return items_[k]; }

  std::vector<double> targets() const {
    std::vector<double> out;
    out.reserve(items_.size());
    for (const auto& it : items_) out.push_back(it.alpha);
    return out;
  }

  friend bool operator==(const TrainingSet& a, const TrainingSet& b) {
    if (a.n_ != b.n_ || !(a.scale_ == b.scale_) || a.items_.size() != b.items_.size()) return false;
    for (std::size_t k = 0; k < a.items_.size(); ++k) {
      if (a.items_[k].x != b.items_[k].x || a.items_[k].alpha != b.items_[k].alpha) return false;
    }
    return true;
  }

 private:
  int n_;
  Scale scale_;
  std::vector<TrainingDatum> items_;
};

// ---------------------------------------------------------------------------
// Data screening

struct DataViolation {
  enum class Kind { BelowMin, AboveMax, Contradiction };
  Kind kind;
  std::size_t item;       // 0-based
  std::size_t other = 0;  // the conflicting item, Contradiction only
};

inline std::string describe(const DataViolation& v) {
  const std::string item = "item " + std::to_string(v.item + 1);
  switch (v.kind) {
    case DataViolation::Kind::BelowMin:
      return item + ": target below the smallest coordinate";
    case DataViolation::Kind::AboveMax:
      return item + ": target above the largest coordinate";
    case DataViolation::Kind::Contradiction:
      return item + ": same object as item " + std::to_string(v.other + 1) +
             " with a different target";
  }
  return item;
}

// Items breaking min_i x_i <= alpha <= max_i x_i, and identical objects with
// different targets. Either one rules out an exact representation.
inline std::vector<DataViolation> validate_data(const TrainingSet& ts) {
  using Kind = DataViolation::Kind;
  std::vector<DataViolation> out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& x = ts[k].x;
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (ts[k].alpha < *lo) out.push_back({Kind::BelowMin, k});
    if (ts[k].alpha > *hi) out.push_back({Kind::AboveMax, k});
  }
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (std::size_t l = k + 1; l < ts.size(); ++l) {
      if (ts[k].x == ts[l].x && ts[k].alpha != ts[l].alpha) {
        out.push_back({Kind::Contradiction, l, k});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Systems built from data. Column labels are subset masks, ascending.

// Columns: nonempty A with |A| <= q; entry min_{i in A} x_i^(k).
inline RelationalSystem build_maxmin_system(const TrainingSet& ts, int q) {
  const int n = ts.n();
  check_q(q, n);
  std::vector<ColumnLabel> cols;
  for (Mask a = 1; a <= full_mask(n); ++a) {
    if (cardinality(a) <= q) cols.push_back(a);
  }
  Matrix m(ts.size(), cols.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(k, j) = detail::min_over(cols[j], ts[k].x);
  }
  return {Composition::MaxMin, std::move(m), ts.targets(), std::move(cols), ts.scale()};
}

// Columns: A != C with |A| >= n - q; entry max_{i not in A} x_i^(k).
inline RelationalSystem build_minmax_system(const TrainingSet& ts, int q) {
  const int n = ts.n();
  check_q(q, n);
  std::vector<ColumnLabel> cols;
  for (Mask a = 0; a < full_mask(n); ++a) {
    if (cardinality(a) >= n - q) cols.push_back(a);
  }
  Matrix m(ts.size(), cols.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m(k, j) = detail::max_over(complement(cols[j], n), ts[k].x);
    }
  }
  return {Composition::MinMax, std::move(m), ts.targets(), std::move(cols), ts.scale()};
}

// Spreads a solution vector over all 2^n subsets using the column labels as
// masks; subsets without a column get `fill`.
inline std::vector<double> by_subset(const RelationalSystem& sys, std::span<const double> v, int n,
                                     double fill) {
  std::vector<double> out(subset_count(n), fill);
  for (std::size_t j = 0; j < v.size(); ++j) out[sys.labels()[j]] = v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Index sets: J_A = {k : min_{i in A} x_i > alpha}, K_B = {k : max_{i not in B} x_i < alpha}.
// e(A) = min_{k in J_A} alpha (min of nothing = 1), f(B) = max_{k in K_B} alpha (max of nothing = 0).

struct IndexSets {
  int n = 0;
  std::vector<std::vector<std::size_t>> j_sets;  // by mask; entry {} unused
  std::vector<std::vector<std::size_t>> k_sets;  // by mask; entry C unused
};

inline IndexSets index_sets(const TrainingSet& ts) {
  const int n = ts.n();
  IndexSets out;
  out.n = n;
  out.j_sets.resize(subset_count(n));
  out.k_sets.resize(subset_count(n));
  for (Mask a = 0; a <= full_mask(n); ++a) {
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (a != 0 && detail::min_over(a, ts[k].x) > ts[k].alpha) out.j_sets[a].push_back(k);
      if (a != full_mask(n) && detail::max_over(complement(a, n), ts[k].x) < ts[k].alpha) {
        out.k_sets[a].push_back(k);
      }
    }
  }
  return out;
}

// e by subset from the index sets; entry {} is set to 0.
inline std::vector<double> greatest_from_index_sets(const TrainingSet& ts, const IndexSets& sets) {
  std::vector<double> e(subset_count(ts.n()), 1.0);
  e[0] = 0.0;
  for (Mask a = 1; a < e.size(); ++a) {
    for (auto k : sets.j_sets[a]) e[a] = std::min(e[a], ts[k].alpha);
  }
  return e;
}

// f by subset from the index sets; entry C is set to 1.
inline std::vector<double> lowest_from_index_sets(const TrainingSet& ts, const IndexSets& sets) {
  std::vector<double> f(subset_count(ts.n()), 0.0);
  f.back() = 1.0;
  for (Mask a = 0; a + 1 < f.size(); ++a) {
    for (auto k : sets.k_sets[a]) f[a] = std::max(f[a], ts[k].alpha);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Learning

enum class LearnMode { Greatest, Lowest, QMax, QMin, ApproxQMax, ApproxQMin };

inline const char* to_string(LearnMode m) {
  switch (m) {
    case LearnMode::Greatest: return "greatest";
    case LearnMode::Lowest: return "lowest";
    case LearnMode::QMax: return "qmax";
    case LearnMode::QMin: return "qmin";
    case LearnMode::ApproxQMax: return "approx_qmax";
    case LearnMode::ApproxQMin: return "approx_qmin";
  }
  return "?";
}

// Subset and value backing the boundary verdict: e(C), f({}), or the best
// candidate on the layer |A| = q (resp. n - q).
struct Witness {
  Mask subset = 0;
  double value = 0.0;
};

struct LearnReport {
  LearnMode mode = LearnMode::Greatest;
  std::optional<int> q;
  bool consistent = false;
  bool boundary_ok = false;
  std::optional<double> distance;
  std::optional<Capacity> capacity;
  std::vector<double> residuals;  // S_mu(x^(k)) - alpha^(k), present with a capacity
  Witness witness;
  std::string message;

  bool success() const { return capacity.has_value(); }
};

inline std::vector<double> residuals(const Capacity& mu, const TrainingSet& ts) {
  std::vector<double> out;
  out.reserve(ts.size());
  for (const auto& item : ts.items()) out.push_back(sugeno_maxmin(mu, item.x) - item.alpha);
  return out;
}

// max_k |S_mu(x^(k)) - alpha^(k)|
inline double learning_error(const Capacity& mu, const TrainingSet& ts) {
  double err = 0.0;
  for (const auto& item : ts.items()) err = std::max(err, std::abs(sugeno_maxmin(mu, item.x) - item.alpha));
  return err;
}

namespace detail {

inline std::string value_text(double v) {
  std::string s = std::to_string(v);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline void finish(LearnReport& r, const TrainingSet& ts, std::vector<double> values, Scale scale) {
  r.capacity.emplace(ts.n(), std::move(scale), std::move(values));
  r.residuals = residuals(*r.capacity, ts);
}

// Best layer value: largest e_q(A) over |A| = size (want == 1).
inline Witness best_upper(std::span<const double> by_mask, int n, int size) {
  Witness w{0, -1.0};
  for (Mask a : subsets_of_size(n, size)) {
    if (by_mask[a] > w.value) w = {a, by_mask[a]};
  }
  return w;
}

// Smallest f_q(A) over |A| = size (want == 0).
inline Witness best_lower(std::span<const double> by_mask, int n, int size) {
  Witness w{0, 2.0};
  for (Mask a : subsets_of_size(n, size)) {
    if (by_mask[a] < w.value) w = {a, by_mask[a]};
  }
  return w;
}

inline std::string inconsistency_message(const char* system) {
  return std::string("the ") + system + " system is inconsistent";
}

}  // namespace detail

// Greatest representing capacity mu_e, from the full max-min system.
inline LearnReport learn_greatest(const TrainingSet& ts) {
  const int n = ts.n();
  LearnReport r;
  r.mode = LearnMode::Greatest;
  const auto sys = build_maxmin_system(ts, n);
  const auto e = potential_greatest(sys);
  r.consistent = maxmin_apply(sys, e) == sys.rhs();
  auto values = by_subset(sys, e, n, 0.0);
  r.witness = {full_mask(n), values[full_mask(n)]};
  r.boundary_ok = r.witness.value == 1.0;
  if (!r.consistent) {
    r.message = detail::inconsistency_message("max-min");
  } else if (!r.boundary_ok) {
    r.message = "e(C) = " + detail::value_text(r.witness.value) + " < 1";
  } else {
    detail::finish(r, ts, std::move(values), ts.scale());
  }
  return r;
}

// Lowest representing capacity mu_f, from the full min-max system.
inline LearnReport learn_lowest(const TrainingSet& ts) {
  const int n = ts.n();
  LearnReport r;
  r.mode = LearnMode::Lowest;
  const auto sys = build_minmax_system(ts, n);
  const auto f = potential_lowest(sys);
  r.consistent = minmax_apply(sys, f) == sys.rhs();
  auto values = by_subset(sys, f, n, 1.0);
  r.witness = {0, values[0]};
  r.boundary_ok = r.witness.value == 0.0;
  if (!r.consistent) {
    r.message = detail::inconsistency_message("min-max");
  } else if (!r.boundary_ok) {
    r.message = "f({}) = " + detail::value_text(r.witness.value) + " > 0";
  } else {
    detail::finish(r, ts, std::move(values), ts.scale());
  }
  return r;
}

namespace detail {

// Shared by the exact and approximate q-maxitive routes: `layer` holds e_q or
// eta_q by subset; the capacity is its maxitive extension when some |A| = q
// reaches 1.
inline void finish_qmax(LearnReport& r, const TrainingSet& ts, std::span<const double> layer, int q,
                        Scale scale, bool require_consistent) {
  r.witness = best_upper(layer, ts.n(), q);
  r.boundary_ok = r.witness.value == 1.0;
  if (require_consistent && !r.consistent) {
    r.message = inconsistency_message("reduced max-min");
  } else if (!r.boundary_ok) {
    r.message = "no subset of size " + std::to_string(q) + " reaches 1; best is " +
                format_subset(r.witness.subset) + " = " + value_text(r.witness.value);
  } else {
    finish(r, ts, maxitive_extension(layer, ts.n(), q), std::move(scale));
  }
}

inline void finish_qmin(LearnReport& r, const TrainingSet& ts, std::span<const double> layer, int q,
                        Scale scale, bool require_consistent) {
  const int n = ts.n();
  r.witness = best_lower(layer, n, n - q);
  r.boundary_ok = r.witness.value == 0.0;
  if (require_consistent && !r.consistent) {
    r.message = inconsistency_message("reduced min-max");
  } else if (!r.boundary_ok) {
    r.message = "no subset of size " + std::to_string(n - q) + " reaches 0; best is " +
                format_subset(r.witness.subset) + " = " + value_text(r.witness.value);
  } else {
    finish(r, ts, minitive_extension(layer, n, q), std::move(scale));
  }
}

}  // namespace detail

// q-maxitive representing capacity mu_v built from e_q.
inline LearnReport learn_qmax(const TrainingSet& ts, int q) {
  check_q(q, ts.n());
  LearnReport r;
  r.mode = LearnMode::QMax;
  r.q = q;
  const auto sys = build_maxmin_system(ts, q);
  const auto e = potential_greatest(sys);
  r.consistent = maxmin_apply(sys, e) == sys.rhs();
  const auto layer = by_subset(sys, e, ts.n(), 0.0);
  detail::finish_qmax(r, ts, layer, q, ts.scale(), true);
  return r;
}

// q-minitive representing capacity mu_^ built from f_q.
inline LearnReport learn_qmin(const TrainingSet& ts, int q) {
  check_q(q, ts.n());
  LearnReport r;
  r.mode = LearnMode::QMin;
  r.q = q;
  const auto sys = build_minmax_system(ts, q);
  const auto f = potential_lowest(sys);
  r.consistent = minmax_apply(sys, f) == sys.rhs();
  const auto layer = by_subset(sys, f, ts.n(), 1.0);
  detail::finish_qmin(r, ts, layer, q, ts.scale(), true);
  return r;
}

// Greatest q-maxitive capacity with the minimal Chebyshev learning error
// Delta_q, built from the greatest approximate solution eta_q. Values live on
// [0,1] whatever the input scale.
inline LearnReport learn_qmax_approx(const TrainingSet& ts, int q) {
  check_q(q, ts.n());
  LearnReport r;
  r.mode = LearnMode::ApproxQMax;
  r.q = q;
  const auto sys = build_maxmin_system(ts, q).embedded();
  const auto d = delta(sys);
  r.distance = d.value;
  r.consistent = is_consistent(sys);
  const auto eta = greatest_approx_solution(sys, d.value);
  const auto layer = by_subset(sys, eta, ts.n(), 0.0);
  detail::finish_qmax(r, ts, layer, q, sys.scale(), false);
  return r;
}

// Lowest q-minitive capacity with minimal error Nabla_q, built from nu_q.
inline LearnReport learn_qmin_approx(const TrainingSet& ts, int q) {
  check_q(q, ts.n());
  LearnReport r;
  r.mode = LearnMode::ApproxQMin;
  r.q = q;
  const auto sys = build_minmax_system(ts, q).embedded();
  const auto d = nabla(sys);
  r.distance = d.value;
  r.consistent = is_consistent(sys);
  const auto nu = lowest_approx_solution(sys, d.value);
  const auto layer = by_subset(sys, nu, ts.n(), 1.0);
  detail::finish_qmin(r, ts, layer, q, sys.scale(), false);
  return r;
}

inline LearnReport learn(const TrainingSet& ts, LearnMode mode, std::optional<int> q = std::nullopt) {
  auto need_q = [&] {
    if (!q) throw std::invalid_argument(std::string(to_string(mode)) + " mode needs q");
    return *q;
  };
  switch (mode) {
    case LearnMode::Greatest: return learn_greatest(ts);
    case LearnMode::Lowest: return learn_lowest(ts);
    case LearnMode::QMax: return learn_qmax(ts, need_q());
    case LearnMode::QMin: return learn_qmin(ts, need_q());
    case LearnMode::ApproxQMax: return learn_qmax_approx(ts, need_q());
    case LearnMode::ApproxQMin: return learn_qmin_approx(ts, need_q());
  }
  throw std::invalid_argument("unknown learn mode");
}

}  // namespace capfre
