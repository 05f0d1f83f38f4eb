#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "capfre/capfre.hpp"
#include "capfre/io.hpp"

namespace capfre::cli {

// Formula-versus-enumeration comparisons run by `capfre oracle`.

struct OracleCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  io::json to_json() const {
    io::json j = io::json::array();
    for (const auto& c : checks) j.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"passed", all_passed()}, {"checks", j}};
  }
};

// Chebyshev distance of one system against the grid search, plus Sanchez
// extremality against solution enumeration when the system is consistent.
inline void check_system(const RelationalSystem& sys, const oracle::GridSpec& grid, const std::string& tag,
                         OracleReport& report) {
  const double tol = sys.scale().tolerance();
  const double step = grid.levels.size() > 1 ? grid.levels[1] - grid.levels[0] : 1.0;
  const auto formula = chebyshev_distance(sys.embedded());
  const double brute = oracle::grid_chebyshev(sys, grid);
  OracleCheck dist{tag + " distance", true, ""};
  dist.passed = brute >= formula.value - tol && brute <= formula.value + step + tol;
  dist.detail = "formula " + io::format_number(formula.value) + ", grid " + io::format_number(brute);
  report.checks.push_back(dist);

  const bool consistent = is_consistent(sys);
  OracleCheck zero{tag + " zero distance iff consistent", (formula.value <= tol) == consistent, ""};
  zero.detail = consistent ? "consistent" : "inconsistent";
  report.checks.push_back(zero);

  if (!consistent) return;
  const auto extremal = potential_solution(sys);
  bool ok = true;
  std::size_t count = 0;
  oracle::enumerate_solutions(sys, grid, [&](const SolutionVector& v) {
    ++count;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sys.kind() == Composition::MaxMin ? v[j] > extremal[j] : v[j] < extremal[j]) ok = false;
    }
  });
  report.checks.push_back({tag + " extremal solution", ok, std::to_string(count) + " grid solutions"});
}

// Random training sets on a uniform grid: per q, both reduced systems against
// the grid oracles, and the approximate capacities against exhaustive
// capacity enumeration.
inline OracleReport random_suite(int n, int items, int trials, int steps, std::uint64_t seed, double budget) {
  OracleReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, steps);
  const Scale scale = Scale::uniform_chain(steps);
  auto grid = oracle::GridSpec::uniform(steps, n);
  grid.budget = budget;
  const double step = 1.0 / steps;

  for (int t = 0; t < trials; ++t) {
    std::vector<TrainingDatum> data;
    for (int k = 0; k < items; ++k) {
      TrainingDatum d;
      for (int i = 0; i < n; ++i) d.x.push_back(static_cast<double>(level(rng)) / steps);
      d.alpha = static_cast<double>(level(rng)) / steps;
      data.push_back(std::move(d));
    }
    const TrainingSet ts(n, scale, std::move(data));
    const std::string trial = "trial " + std::to_string(t + 1);
    for (int q = 1; q <= n; ++q) {
      const std::string tag = trial + " q=" + std::to_string(q);
      check_system(build_maxmin_system(ts, q), grid, tag + " maxmin", report);
      check_system(build_minmax_system(ts, q), grid, tag + " minmax", report);

      const auto checks = {std::pair{learn_qmax_approx(ts, q), oracle::QConstraint::qmax(q)},
                           std::pair{learn_qmin_approx(ts, q), oracle::QConstraint::qmin(q)}};
      for (const auto& [rep, constraint] : checks) {
        if (!rep.capacity) continue;
        auto spec = grid;
        spec.constraint = constraint;
        const double d = *rep.distance;
        const bool upper = constraint.kind == oracle::QConstraint::Kind::QMax;
        double best = INFINITY;
        bool extremal = true;
        oracle::enumerate_capacities(spec, [&](const Capacity& mu) {
          const double err = learning_error(mu, ts);
          best = std::min(best, err);
          if (err > d + 1e-9) return;
          for (Mask a = 0; a <= full_mask(n); ++a) {
            if (upper ? mu[a] > (*rep.capacity)[a] + 1e-9 : mu[a] < (*rep.capacity)[a] - 1e-9) extremal = false;
          }
        });
        const std::string name = tag + (upper ? " approx qmax" : " approx qmin");
        report.checks.push_back({name + " minimal error", best >= d - 1e-9 && best <= d + step + 1e-9,
                                 "distance " + io::format_number(d) + ", grid " + io::format_number(best)});
        report.checks.push_back({name + " extremal capacity", extremal, ""});
      }
    }
  }
  return report;
}

}  // namespace capfre::cli
