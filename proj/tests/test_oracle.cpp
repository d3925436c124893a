#include "dea/oracle.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace dea;
using fixtures::pt;

TEST(GridMin, FindsBoxMinimumOfConvexRegion) {
  // Feasible when theta >= 0.37 and phi <= 1.8: minimum at the corner.
  const Point p = pt({1}, {1});
  const oracle::Membership member = [](const Point& q) { return q.x[0] >= 0.37 - 1e-12 && q.y[0] <= 1.8 + 1e-12; };
  const auto r = oracle::grid_min_g(member, p, oracle::uniform_grid(Eigen::VectorXd::Constant(1, 3.0), 1, 0.1));
  EXPECT_NEAR(r.theta[0], 0.37, 1e-9);
  EXPECT_NEAR(r.phi[0], 1.8, 1e-9);
  EXPECT_NEAR(r.value, (0.37 + 1 / 1.8) / 2, 1e-9);
}

TEST(GridMin, InfeasibleEverywhere) {
  const auto r = oracle::grid_min_g([](const Point&) { return false; }, pt({1}, {1}),
                                    oracle::uniform_grid(Eigen::VectorXd::Constant(1, 2.0), 1, 0.5));
  EXPECT_TRUE(std::isinf(r.value));
}

TEST(LineSearch, BisectsToBoundary) {
  const oracle::Membership member = [](const Point& q) { return q.x[0] >= 0.3 && q.y[0] <= 7.25; };
  EXPECT_NEAR(oracle::line_search_extreme(member, pt({2}, {1}), CoordinateKind::input, 0), 0.15, 1e-9);
  EXPECT_NEAR(oracle::line_search_extreme(member, pt({2}, {1}), CoordinateKind::output, 0), 7.25, 1e-9);
}

TEST(FreeLunchOracle, Fixtures) {
  EXPECT_TRUE(oracle::free_lunch_lp_oracle(build_exfa(build_vrs(fixtures::six_units()))));
  EXPECT_FALSE(oracle::free_lunch_lp_oracle(build_exfa(build_vrs(fixtures::ab()))));
  Eigen::VectorXd v(4), u(2);
  v << 0.407493, 5.69403, 10.8921, 1.28423;
  u << 0.959148, 7.22785;
  const ExtendedTechnology airline({Facet{*normalized(v, u, 15201.7), {}}}, nullptr);
  EXPECT_TRUE(oracle::free_lunch_lp_oracle(airline));
}

TEST(FreeLunchOracle, ZeroInterceptHasNoFreeLunch) {
  const ExtendedTechnology exfa({Facet{*normalized(Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1), 0.0), {}}}, nullptr);
  EXPECT_FALSE(oracle::free_lunch_lp_oracle(exfa));
  EXPECT_FALSE(detect_free_lunch(exfa).allows_free_lunch);
}
