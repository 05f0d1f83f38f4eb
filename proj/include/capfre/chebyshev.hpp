#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "capfre/relational_system.hpp"

namespace capfre {

// Chebyshev distance between the rhs of a (possibly inconsistent) system and
// the set of second members c in [0,1]^N for which the same matrix gives a
// consistent system, together with the extremal approximate solutions.
// Chain-valued systems are read as points of [0,1]; results may leave the chain.

struct ChebyshevDistance {
  double value = 0.0;
  std::vector<double> per_row;
};

constexpr double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// sigma_G(a_i, m_l, a_l) = min((a_i - a_l)^+ / 2, (m_l - a_l)^+)
constexpr double sigma_g(double alpha_i, double m_l, double alpha_l) {
  return std::min(positive_part(alpha_i - alpha_l) / 2.0, positive_part(m_l - alpha_l));
}

// sigma_eps(a_i, g_l, a_l) = min((a_l - a_i)^+ / 2, (a_l - g_l)^+)
constexpr double sigma_eps(double alpha_i, double gamma_l, double alpha_l) {
  return std::min(positive_part(alpha_l - alpha_i) / 2.0, positive_part(alpha_l - gamma_l));
}

// For a max-min system:
//   delta_{i,j} = max((b_i - a_ij)^+, max_l sigma_G(b_i, a_lj, b_l))
//   delta_i     = min_j delta_{i,j},   Delta = max_i delta_i
inline ChebyshevDistance delta(const RelationalSystem& sys) {
  detail::check_kind(sys, Composition::MaxMin, "delta");
  const Matrix& a = sys.matrix();
  const auto& b = sys.rhs();
  const std::size_t rows = a.rows();
  ChebyshevDistance out;
  out.per_row.assign(rows, 1.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 1.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double d = positive_part(b[i] - a(i, j));
      for (std::size_t l = 0; l < rows && d < best; ++l) d = std::max(d, sigma_g(b[i], a(l, j), b[l]));
      best = std::min(best, d);
    }
    out.per_row[i] = best;
    out.value = std::max(out.value, best);
  }
  return out;
}

// For a min-max system:
//   nabla_{i,j} = max((g_ij - b_i)^+, max_l sigma_eps(b_i, g_lj, b_l))
//   nabla_i     = min_j nabla_{i,j},   Nabla = max_i nabla_i
inline ChebyshevDistance nabla(const RelationalSystem& sys) {
  detail::check_kind(sys, Composition::MinMax, "nabla");
  const Matrix& g = sys.matrix();
  const auto& b = sys.rhs();
  const std::size_t rows = g.rows();
  ChebyshevDistance out;
  out.per_row.assign(rows, 1.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 1.0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      double d = positive_part(g(i, j) - b[i]);
      for (std::size_t l = 0; l < rows && d < best; ++l) d = std::max(d, sigma_eps(b[i], g(l, j), b[l]));
      best = std::min(best, d);
    }
    out.per_row[i] = best;
    out.value = std::max(out.value, best);
  }
  return out;
}

inline ChebyshevDistance chebyshev_distance(const RelationalSystem& sys) {
  return sys.kind() == Composition::MaxMin ? delta(sys) : nabla(sys);
}

// [min(b_i + d, 1)]
inline std::vector<double> upper_bound_rhs(std::span<const double> rhs, double d) {
  std::vector<double> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = std::min(rhs[i] + d, 1.0);
  return out;
}

// [max(b_i - d, 0)]
inline std::vector<double> lower_bound_rhs(std::span<const double> rhs, double d) {
  std::vector<double> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = std::max(rhs[i] - d, 0.0);
  return out;
}

// eta = A^t (->G, min) upper_bound_rhs(b, Delta). The shifted rhs carries
// rounding from the addition, so the implication's x <= y test is widened by
// the scale tolerance; at Delta = 0 this is exactly potential_greatest.
inline SolutionVector greatest_approx_solution(const RelationalSystem& sys, double d) {
  detail::check_kind(sys, Composition::MaxMin, "greatest_approx_solution");
  if (d == 0.0) return potential_greatest(sys);
  const Matrix& a = sys.matrix();
  const auto bound = upper_bound_rhs(sys.rhs(), d);
  const double tol = sys.scale().tolerance();
  SolutionVector eta(a.cols(), 1.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      eta[j] = std::min(eta[j], a(k, j) <= bound[k] + tol ? 1.0 : bound[k]);
    }
  }
  return eta;
}

inline SolutionVector greatest_approx_solution(const RelationalSystem& sys) {
  return greatest_approx_solution(sys, delta(sys).value);
}

// nu = G^t (eps, max) lower_bound_rhs(b, Nabla); x < y is narrowed by the tolerance.
inline SolutionVector lowest_approx_solution(const RelationalSystem& sys, double d) {
  detail::check_kind(sys, Composition::MinMax, "lowest_approx_solution");
  if (d == 0.0) return potential_lowest(sys);
  const Matrix& g = sys.matrix();
  const auto bound = lower_bound_rhs(sys.rhs(), d);
  const double tol = sys.scale().tolerance();
  SolutionVector nu(g.cols(), 0.0);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t k = 0; k < g.rows(); ++k) {
      nu[j] = std::max(nu[j], g(k, j) < bound[k] - tol ? bound[k] : 0.0);
    }
  }
  return nu;
}

inline SolutionVector lowest_approx_solution(const RelationalSystem& sys) {
  return lowest_approx_solution(sys, nabla(sys).value);
}

}  // namespace capfre
