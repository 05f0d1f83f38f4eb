#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capfre/scale.hpp"

namespace capfre {

// Systems of fuzzy relational equations over L.
//
//   MaxMin:  max_j min(a_kj, x_j) = b_k   greatest solution candidate e = A^t (->G, min) b
//   MinMax:  min_j max(g_kj, x_j) = b_k   lowest solution candidate   f = G^t (eps, max) b
//
// A system is consistent iff applying it to its candidate reproduces the rhs.
// Every quantity here is a selection of input values, so comparisons are exact.

enum class Composition { MaxMin, MinMax };

inline const char* to_string(Composition c) { return c == Composition::MaxMin ? "maxmin" : "minmax"; }

// Column labels are opaque to the solver; capacity learning uses subset masks.
using ColumnLabel = std::uint32_t;

using SolutionVector = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

class RelationalSystem {
 public:
  RelationalSystem(Composition kind, Matrix matrix, std::vector<double> rhs,
                   std::vector<ColumnLabel> labels, Scale scale)
      : kind_(kind),
        matrix_(std::move(matrix)),
        rhs_(std::move(rhs)),
        labels_(std::move(labels)),
        scale_(std::move(scale)) {
    validate();
  }

  // Labels default to 0..m-1.
  RelationalSystem(Composition kind, Matrix matrix, std::vector<double> rhs, Scale scale)
      : kind_(kind),
        matrix_(std::move(matrix)),
        rhs_(std::move(rhs)),
        labels_(iota_labels(matrix_.cols())),
        scale_(std::move(scale)) {
    validate();
  }

  Composition kind() const { return kind_; }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<double>& rhs() const { return rhs_; }
  const std::vector<ColumnLabel>& labels() const { return labels_; }
  const Scale& scale() const { return scale_; }
  std::size_t equations() const { return matrix_.rows(); }
  std::size_t unknowns() const { return matrix_.cols(); }

  // Same matrix and labels, new second member.
  RelationalSystem with_rhs(std::vector<double> rhs) const {
    return {kind_, matrix_, std::move(rhs), labels_, scale_};
  }

  // Same system with the scale widened to [0,1].
  RelationalSystem embedded() const {
    return {kind_, matrix_, rhs_, labels_, Scale::unit_interval(scale_.tolerance())};
  }

 private:
  static std::vector<ColumnLabel> iota_labels(std::size_t m) {
    std::vector<ColumnLabel> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<ColumnLabel>(j);
    return out;
  }

  void validate() const {
    if (matrix_.rows() == 0 || matrix_.cols() == 0) {
      throw std::invalid_argument("relational system needs at least one equation and one unknown");
    }
    if (rhs_.size() != matrix_.rows()) {
      throw std::invalid_argument("rhs has " + std::to_string(rhs_.size()) + " entries for " +
                                  std::to_string(matrix_.rows()) + " equations");
    }
    if (labels_.size() != matrix_.cols()) {
      throw std::invalid_argument("column labels do not match matrix width");
    }
    if (std::set<ColumnLabel>(labels_.begin(), labels_.end()).size() != labels_.size()) {
      throw std::invalid_argument("duplicate column labels");
    }
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        scale_.require(matrix_(r, c),
                       "matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
      }
      scale_.require(rhs_[r], "rhs entry " + std::to_string(r + 1));
    }
  }

  Composition kind_;
  Matrix matrix_;
  std::vector<double> rhs_;
  std::vector<ColumnLabel> labels_;
  Scale scale_;
};

// x ->G y
constexpr double godel_imp(double x, double y) { return x <= y ? 1.0 : y; }

// x eps y
constexpr double eps_prod(double x, double y) { return x < y ? y : 0.0; }

namespace detail {

inline void check_width(const Matrix& m, std::span<const double> v) {
  if (v.size() != m.cols()) {
    throw std::domain_error("vector has " + std::to_string(v.size()) + " entries, system has " +
                            std::to_string(m.cols()) + " unknowns");
  }
}

inline void check_kind(const RelationalSystem& sys, Composition want, const char* op) {
  if (sys.kind() != want) {
    throw std::domain_error(std::string(op) + " needs a " + to_string(want) + " system");
  }
}

}  // namespace detail

inline std::vector<double> maxmin_apply(const Matrix& m, std::span<const double> v) {
  detail::check_width(m, v);
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[k] = std::max(out[k], std::min(m(k, j), v[j]));
  }
  return out;
}

inline std::vector<double> minmax_apply(const Matrix& m, std::span<const double> v) {
  detail::check_width(m, v);
  std::vector<double> out(m.rows(), 1.0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[k] = std::min(out[k], std::max(m(k, j), v[j]));
  }
  return out;
}

inline std::vector<double> maxmin_apply(const RelationalSystem& sys, std::span<const double> v) {
  return maxmin_apply(sys.matrix(), v);
}

inline std::vector<double> minmax_apply(const RelationalSystem& sys, std::span<const double> v) {
  return minmax_apply(sys.matrix(), v);
}

// Applies the system's own composition.
inline std::vector<double> apply_system(const RelationalSystem& sys, std::span<const double> v) {
  return sys.kind() == Composition::MaxMin ? maxmin_apply(sys, v) : minmax_apply(sys, v);
}

// e_j = min_k (a_kj ->G b_k), for an arbitrary second member b.
inline SolutionVector godel_transpose(const Matrix& m, std::span<const double> b) {
  SolutionVector e(m.cols(), 1.0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < m.rows(); ++k) e[j] = std::min(e[j], godel_imp(m(k, j), b[k]));
  }
  return e;
}

// f_j = max_k (g_kj eps b_k), for an arbitrary second member b.
inline SolutionVector eps_transpose(const Matrix& m, std::span<const double> b) {
  SolutionVector f(m.cols(), 0.0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < m.rows(); ++k) f[j] = std::max(f[j], eps_prod(m(k, j), b[k]));
  }
  return f;
}

// Computed for any max-min system; it is the greatest solution when one exists.
inline SolutionVector potential_greatest(const RelationalSystem& sys) {
  detail::check_kind(sys, Composition::MaxMin, "potential_greatest");
  return godel_transpose(sys.matrix(), sys.rhs());
}

// Computed for any min-max system; it is the lowest solution when one exists.
inline SolutionVector potential_lowest(const RelationalSystem& sys) {
  detail::check_kind(sys, Composition::MinMax, "potential_lowest");
  return eps_transpose(sys.matrix(), sys.rhs());
}

// The candidate matching the system's composition (e for MaxMin, f for MinMax).
inline SolutionVector potential_solution(const RelationalSystem& sys) {
  return sys.kind() == Composition::MaxMin ? potential_greatest(sys) : potential_lowest(sys);
}

inline bool is_consistent(const RelationalSystem& sys) {
  return apply_system(sys, potential_solution(sys)) == sys.rhs();
}

}  // namespace capfre
