#include "dea/lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dea;
using namespace dea::lp;

TEST(SolveLp, ContradictoryBoundIsInfeasible) {
  ProgramBuilder b;
  const Index x = b.add_variable(0.0, kInfinity);
  b.add_row({{x, 1.0}}, RowSense::less_equal, -1.0);
  EXPECT_EQ(solve_lp(b.build()).status, Status::infeasible);
}

TEST(SolveLp, SingleBoundOptimum) {
  ProgramBuilder b;
  b.set_sense(ObjectiveSense::maximize);
  const Index x = b.add_variable(0.0, kInfinity, 1.0);
  b.add_row({{x, 1.0}}, RowSense::less_equal, 3.0);
  const Solution s = solve_lp(b.build());
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 3.0, 1e-12);
  EXPECT_EQ(s.active_row_indices, std::vector<Index>{0});
}

TEST(SolveLp, UnboundedIsReported) {
  ProgramBuilder b;
  b.set_sense(ObjectiveSense::maximize);
  const Index x = b.add_variable(0.0, kInfinity, 1.0);
  const Index y = b.add_variable(0.0, kInfinity);
  b.add_row({{x, 1.0}, {y, -1.0}}, RowSense::less_equal, 1.0);
  EXPECT_EQ(solve_lp(b.build()).status, Status::unbounded);
}

// The theta' program for DMU F of the six-DMU example.
TEST(SolveLp, ThetaPrimeProgramAgreesWithLineSearch) {
  ProgramBuilder b;
  const Index theta = b.add_variable(0.0, 1.0, 1.0);
  b.add_row({{theta, -20.0}}, RowSense::less_equal, 3.0 - 2.0);
  b.add_row({{theta, -20.0}}, RowSense::less_equal, 13.0 - 6.0);
  const Solution s = solve_lp(b.build());
  ASSERT_TRUE(s.optimal());

  double grid = 1.0;
  for (int k = 1000000; k >= 0; --k) {
    const double t = k * 1e-6;
    if (-20.0 * t + 2.0 <= 3.0 && -20.0 * t + 6.0 <= 13.0) grid = t;
  }
  EXPECT_NEAR(s.variable_values[theta], 0.0, 1e-12);
  EXPECT_NEAR(s.variable_values[theta], grid, 1e-6);
}

TEST(SolveLp, FreeAndUpperBoundedVariables) {
  // min x + y with x free, y <= 2, x + y >= -3, x - y <= 1
  ProgramBuilder b;
  const Index x = b.add_variable(-kInfinity, kInfinity, 1.0);
  const Index y = b.add_variable(-kInfinity, 2.0, 1.0);
  b.add_row({{x, 1.0}, {y, 1.0}}, RowSense::greater_equal, -3.0);
  b.add_row({{x, 1.0}, {y, -1.0}}, RowSense::less_equal, 1.0);
  const Solution s = solve_lp(b.build());
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, -3.0, 1e-9);
  EXPECT_LE(s.variable_values[y], 2.0 + 1e-9);
}

TEST(SolveLp, EqualityWithRedundantRow) {
  ProgramBuilder b;
  const Index x = b.add_variable(0.0, kInfinity, 1.0);
  const Index y = b.add_variable(0.0, kInfinity, 2.0);
  b.add_row({{x, 1.0}, {y, 1.0}}, RowSense::equal, 4.0);
  b.add_row({{x, 2.0}, {y, 2.0}}, RowSense::equal, 8.0);
  const Solution s = solve_lp(b.build());
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 4.0, 1e-9);
}

TEST(SolveLp, RandomProblemsAreFeasibleDeterministicAndConsistent) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    ProgramBuilder b;
    const Index n = 4, rows = 6;
    for (Index j = 0; j < n; ++j) b.add_variable(0.0, 10.0, coef(rng));
    for (Index i = 0; i < rows; ++i) {
      std::vector<std::pair<Index, double>> terms;
      for (Index j = 0; j < n; ++j) terms.emplace_back(j, coef(rng));
      b.add_row(terms, i % 3 == 0 ? RowSense::greater_equal : RowSense::less_equal, 0.5 + coef(rng));
    }
    const LinearProgram problem = b.build();
    const Solution first = solve_lp(problem);
    const Solution second = solve_lp(problem);
    ASSERT_EQ(first.status, second.status);
    if (!first.optimal()) continue;
    EXPECT_EQ(first.variable_values, second.variable_values);
    EXPECT_NEAR(problem.objective.dot(first.variable_values), first.objective_value, 1e-8);
    const Eigen::VectorXd activity = problem.constraints.matrix * first.variable_values;
    for (Index i = 0; i < rows; ++i) {
      const double slack = activity[i] - problem.constraints.rhs[i];
      if (problem.constraints.senses[static_cast<std::size_t>(i)] == RowSense::less_equal)
        EXPECT_LE(slack, 1e-7);
      else
        EXPECT_GE(slack, -1e-7);
      const bool active = std::find(first.active_row_indices.begin(), first.active_row_indices.end(), i) !=
                          first.active_row_indices.end();
      EXPECT_EQ(active, std::abs(slack) <= 1e-7);
    }
  }
}

namespace {

ConstraintSystem fractional_rows(double a, double c, double rhs) {
  // a*theta + c*phi + rhs = 0, theta in [0,1], phi >= 1
  ProgramBuilder b;
  const Index theta = b.add_variable(0.0, 1.0);
  const Index phi = b.add_variable(1.0, kInfinity);
  b.add_row({{theta, a}, {phi, c}}, RowSense::equal, -rhs);
  return b.constraints();
}

AffineForm unit(Index k) {
  AffineForm f{Eigen::VectorXd::Zero(2), 0.0};
  f.coefficients[k] = 1.0;
  return f;
}

}  // namespace

TEST(LinearFractional, FacetTwoSubproblemOfDmuF) {
  const Solution s = solve_linear_fractional(unit(0), unit(1), fractional_rows(20, -6, 13), ObjectiveSense::maximize);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 6.0 / 33.0, 1e-9);
  EXPECT_NEAR(s.variable_values[0], 1.0, 1e-9);
  EXPECT_NEAR(s.variable_values[1], 5.5, 1e-9);

  double sweep = 0.0;
  for (int k = 0; k <= 1000000; ++k) {
    const double theta = k * 1e-6;
    const double phi = (20 * theta + 13) / 6;
    if (phi >= 1.0) sweep = std::max(sweep, theta / phi);
  }
  EXPECT_NEAR(s.objective_value, sweep, 1e-6);
}

TEST(LinearFractional, FixedPoint) {
  ProgramBuilder b;
  b.add_variable(1.0, 1.0);
  b.add_variable(1.0, 1.0);
  const Solution s = solve_linear_fractional(unit(0), unit(1), b.constraints(), ObjectiveSense::maximize);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 1.0, 1e-12);
}

TEST(LinearFractional, FacetOneSubproblemOfDmuE) {
  const Solution s = solve_linear_fractional(unit(0), unit(1), fractional_rows(1.5, -2, 3), ObjectiveSense::maximize);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective_value, 2.0 / 4.5, 1e-9);
  EXPECT_NEAR(s.variable_values[0], 1.0, 1e-9);
  EXPECT_NEAR(s.variable_values[1], 2.25, 1e-9);
}

TEST(LinearFractional, InfeasibleIsPropagated) {
  ProgramBuilder b;
  const Index theta = b.add_variable(0.0, 1.0);
  b.add_variable(1.0, kInfinity);
  b.add_row({{theta, 1.0}}, RowSense::greater_equal, 2.0);
  EXPECT_EQ(solve_linear_fractional(unit(0), unit(1), b.constraints(), ObjectiveSense::maximize).status,
            Status::infeasible);
}

TEST(LinearFractional, BeatsRandomFeasiblePoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(0.1, 2.0);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    // z in [0,1]^2 x [1,4]; sum of weighted z <= cap
    ProgramBuilder b;
    b.add_variables(2, 0.0, 1.0);
    b.add_variable(1.0, 4.0);
    const double w0 = coef(rng), w1 = coef(rng), w2 = coef(rng);
    const double cap = w2 + 0.5 * (w0 + w1);
    b.add_row({{0, w0}, {1, w1}, {2, w2}}, RowSense::less_equal, cap);
    AffineForm num{Eigen::Vector3d(coef(rng), coef(rng), 0.0), 0.1};
    AffineForm den{Eigen::Vector3d(0.0, 0.0, coef(rng)), 1.0};
    const Solution s = solve_linear_fractional(num, den, b.constraints(), ObjectiveSense::maximize);
    ASSERT_TRUE(s.optimal());
    for (int k = 0; k < 1000; ++k) {
      const Eigen::Vector3d z(unit01(rng), unit01(rng), 1.0 + 3.0 * unit01(rng));
      if (w0 * z[0] + w1 * z[1] + w2 * z[2] > cap) continue;
      EXPECT_GE(s.objective_value, num(z) / den(z) - 1e-9);
    }
  }
}
