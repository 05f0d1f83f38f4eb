#include <gtest/gtest.h>

#include "capfre/learning.hpp"
#include "capfre/oracle.hpp"
#include "capfre/relational_system.hpp"
#include "support.hpp"

namespace capfre {
namespace {

using testing::Random;

RelationalSystem single(Composition kind, std::vector<double> row, double rhs) {
  return {kind, Matrix::from_rows({row}), {rhs}, Scale::unit_interval()};
}

TEST(Operators, GodelImplication) {
  EXPECT_EQ(godel_imp(0.3, 0.7), 1.0);
  EXPECT_EQ(godel_imp(0.7, 0.3), 0.3);
  EXPECT_EQ(godel_imp(0.5, 0.5), 1.0);
}

TEST(Operators, EpsilonProduct) {
  EXPECT_EQ(eps_prod(0.3, 0.7), 0.7);
  EXPECT_EQ(eps_prod(0.7, 0.3), 0.0);
  EXPECT_EQ(eps_prod(0.5, 0.5), 0.0);
}

TEST(Operators, AntitoneInFirstArgument) {
  const auto s = Scale::uniform_chain(10);
  for (double x : s.levels()) {
    for (double x2 : s.levels()) {
      if (x > x2) continue;
      for (double y : s.levels()) {
        EXPECT_LE(godel_imp(x2, y), godel_imp(x, y));
        EXPECT_LE(eps_prod(x2, y), eps_prod(x, y));
      }
    }
  }
}

TEST(RelationalSystem, Validation) {
  const auto unit = Scale::unit_interval();
  EXPECT_THROW(RelationalSystem(Composition::MaxMin, Matrix(), {}, unit), std::invalid_argument);
  EXPECT_THROW(RelationalSystem(Composition::MaxMin, Matrix(2, 2), {0.1}, unit), std::invalid_argument);
  EXPECT_THROW(RelationalSystem(Composition::MaxMin, Matrix(1, 2), {0.1}, {3, 3}, unit), std::invalid_argument);
  EXPECT_THROW(RelationalSystem(Composition::MaxMin, Matrix::from_rows({{1.5}}), {0.1}, unit), std::domain_error);
  EXPECT_THROW(RelationalSystem(Composition::MaxMin, Matrix::from_rows({{0.5}}), {0.33}, Scale::uniform_chain(20)),
               std::domain_error);
  EXPECT_THROW(Matrix::from_rows({{0.1, 0.2}, {0.3}}), std::invalid_argument);
}

TEST(Apply, Examples) {
  const auto one = single(Composition::MaxMin, {1.0}, 0.4);
  EXPECT_EQ(maxmin_apply(one, std::vector<double>{0.4}), std::vector<double>{0.4});
  const auto zero = single(Composition::MinMax, {0.0}, 0.4);
  EXPECT_EQ(minmax_apply(zero, std::vector<double>{0.4}), std::vector<double>{0.4});
  EXPECT_THROW(maxmin_apply(one, std::vector<double>{0.1, 0.2}), std::domain_error);

  Random rnd(1);
  for (int t = 0; t < 50; ++t) {
    const auto m = rnd.matrix(3, 4, 20);
    EXPECT_EQ(maxmin_apply(m, std::vector<double>(4, 0.0)), std::vector<double>(3, 0.0));
    EXPECT_EQ(minmax_apply(m, std::vector<double>(4, 1.0)), std::vector<double>(3, 1.0));
  }
}

TEST(Potentials, ThreeCriteriaMaxMin) {
  const auto ts = testing::three_criteria_data();
  const auto sys = build_maxmin_system(ts, 3);
  const auto e = potential_greatest(sys);
  const auto by = by_subset(sys, e, 3, 0.0);
  EXPECT_EQ(by, testing::greatest_capacity_values());
  EXPECT_EQ(maxmin_apply(sys, e), (std::vector<double>{0.2, 0.3, 0.4}));
  EXPECT_TRUE(is_consistent(sys));
}

TEST(Potentials, ThreeCriteriaMinMax) {
  const auto ts = testing::three_criteria_data();
  const auto sys = build_minmax_system(ts, 3);
  const auto f = potential_lowest(sys);
  const auto by = by_subset(sys, f, 3, 1.0);
  EXPECT_EQ(by, testing::lowest_capacity_values());
  EXPECT_EQ(minmax_apply(sys, f), (std::vector<double>{0.2, 0.3, 0.4}));
  EXPECT_TRUE(is_consistent(sys));
}

TEST(Potentials, SmallExamples) {
  EXPECT_EQ(potential_greatest(single(Composition::MaxMin, {0.3}, 0.5)), SolutionVector{1.0});
  EXPECT_EQ(potential_greatest(single(Composition::MaxMin, {0.9, 0.4}, 0.5)), (SolutionVector{0.5, 1.0}));
  EXPECT_EQ(potential_lowest(single(Composition::MinMax, {0.7}, 0.5)), SolutionVector{0.0});
  EXPECT_EQ(potential_lowest(single(Composition::MinMax, {0.2, 0.9}, 0.5)), (SolutionVector{0.5, 0.0}));
  EXPECT_THROW(potential_greatest(single(Composition::MinMax, {0.2}, 0.5)), std::domain_error);
  EXPECT_THROW(potential_lowest(single(Composition::MaxMin, {0.2}, 0.5)), std::domain_error);
}

TEST(Consistency, Examples) {
  EXPECT_FALSE(is_consistent(single(Composition::MaxMin, {0.5}, 0.8)));
  EXPECT_TRUE(is_consistent(single(Composition::MaxMin, {0.5}, 0.3)));
  EXPECT_FALSE(is_consistent(single(Composition::MinMax, {0.5}, 0.2)));
}

TEST(Consistency, ConstructedSystemsAreConsistent) {
  Random rnd(2);
  const auto scale = Scale::uniform_chain(20);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = rnd.uniform_int(1, 4);
    const std::size_t cols = rnd.uniform_int(1, 6);
    const auto m = rnd.matrix(rows, cols, 20);
    const auto v = rnd.object(static_cast<int>(cols), 20);
    const RelationalSystem up(Composition::MaxMin, m, maxmin_apply(m, v), scale);
    const RelationalSystem down(Composition::MinMax, m, minmax_apply(m, v), scale);
    ASSERT_TRUE(is_consistent(up));
    ASSERT_TRUE(is_consistent(down));
    // e dominates the generating vector, f is dominated by it
    const auto e = potential_greatest(up);
    const auto f = potential_lowest(down);
    for (std::size_t j = 0; j < cols; ++j) {
      EXPECT_LE(v[j], e[j]);
      EXPECT_GE(v[j], f[j]);
    }
    EXPECT_EQ(maxmin_apply(up, e), up.rhs());
    EXPECT_EQ(minmax_apply(down, f), down.rhs());
  }
}

TEST(Consistency, ExtremalAgainstEnumeration) {
  Random rnd(3);
  const auto grid = oracle::GridSpec::uniform(4, 1);
  const auto scale = Scale::uniform_chain(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = rnd.uniform_int(1, 3);
    const std::size_t cols = rnd.uniform_int(1, 4);
    const auto m = rnd.matrix(rows, cols, 4);
    const auto v = rnd.object(static_cast<int>(cols), 4);
    for (auto kind : {Composition::MaxMin, Composition::MinMax}) {
      const auto rhs = kind == Composition::MaxMin ? maxmin_apply(m, v) : minmax_apply(m, v);
      const RelationalSystem sys(kind, m, rhs, scale);
      const auto ext = potential_solution(sys);
      bool found = false;
      for (const auto& s : oracle::collect_solutions(sys, grid)) {
        found = found || s == ext;
        for (std::size_t j = 0; j < cols; ++j) {
          if (kind == Composition::MaxMin) {
            EXPECT_LE(s[j], ext[j]);
          } else {
            EXPECT_GE(s[j], ext[j]);
          }
        }
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Potentials, AntitoneInMatrixEntries) {
  Random rnd(4);
  const auto scale = Scale::uniform_chain(20);
  for (int t = 0; t < 300; ++t) {
    const auto m = rnd.matrix(3, 4, 20);
    const auto b = rnd.object(3, 20);
    auto bigger = m;
    const std::size_t r = rnd.uniform_int(0, 2);
    const std::size_t c = rnd.uniform_int(0, 3);
    bigger(r, c) = rnd.level_at_least(m(r, c), 20);
    const auto e1 = potential_greatest({Composition::MaxMin, m, b, scale});
    const auto e2 = potential_greatest({Composition::MaxMin, bigger, b, scale});
    const auto f1 = potential_lowest({Composition::MinMax, m, b, scale});
    const auto f2 = potential_lowest({Composition::MinMax, bigger, b, scale});
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_LE(e2[j], e1[j]);
      EXPECT_LE(f2[j], f1[j]);
    }
  }
}

}  // namespace
}  // namespace capfre
