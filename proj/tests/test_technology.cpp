#include "dea/technology.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dea;
using fixtures::pt;

TEST(BuildVrs, RejectsNonPositiveData) {
  Dataset d = fixtures::six_units();
  d.inputs(2, 0) = 0.0;
  try {
    build_vrs(d);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("non-positive data"), std::string::npos);
  }
}

TEST(BuildVrs, RejectsDuplicateIdsAndShapeMismatch) {
  Dataset d = fixtures::six_units();
  d.dmu_ids[1] = "A";
  EXPECT_THROW(build_vrs(d), DataError);
  Dataset e = fixtures::six_units();
  e.dmu_ids.pop_back();
  EXPECT_THROW(build_vrs(e), DataError);
}

TEST(Contains, SixUnitsExamples) {
  const auto tech = build_vrs(fixtures::six_units());
  EXPECT_TRUE(contains(tech, pt({1}, {4})));
  EXPECT_TRUE(contains(tech, pt({20}, {2})));
  EXPECT_FALSE(contains(tech, pt({0.5}, {4})));
  EXPECT_FALSE(contains(tech, pt({0}, {3})));
  EXPECT_FALSE(contains(tech, pt({1}, {4.0001})));
}

TEST(Contains, SingleDmuDisposability) {
  const auto tech = build_vrs(fixtures::make({"P"}, {{2}}, {{3}}));
  EXPECT_TRUE(contains(tech, pt({3}, {2})));
  EXPECT_FALSE(contains(tech, pt({1}, {3})));
}

TEST(Contains, DimensionMismatchThrows) {
  const auto tech = build_vrs(fixtures::six_units());
  EXPECT_THROW(contains(tech, pt({1, 1}, {4})), DataError);
}

TEST(Classify, SixUnitsStatuses) {
  const auto tech = build_vrs(fixtures::six_units());
  const Dataset& d = tech.dataset();
  EXPECT_EQ(classify(tech, d.dmu(0)), EfficiencyStatus::StronglyEfficient);
  EXPECT_EQ(classify(tech, d.dmu(1)), EfficiencyStatus::StronglyEfficient);
  EXPECT_EQ(classify(tech, d.dmu(2)), EfficiencyStatus::StronglyEfficient);
  EXPECT_EQ(classify(tech, d.dmu(3)), EfficiencyStatus::WeaklyEfficient);
  EXPECT_EQ(classify(tech, d.dmu(4)), EfficiencyStatus::Inefficient);
  EXPECT_EQ(classify(tech, d.dmu(5)), EfficiencyStatus::Inefficient);
}

TEST(Classify, OutsidePointThrows) {
  const auto tech = build_vrs(fixtures::six_units());
  try {
    classify(tech, pt({0}, {3}));
    FAIL() << "expected OutsideTechnology";
  } catch (const OutsideTechnology& e) {
    EXPECT_STREQ(e.what(), "point outside technology");
  }
}

namespace {

Dataset random_dataset(std::mt19937_64& rng, Index n, Index m, Index s) {
  std::uniform_real_distribution<double> value(1.0, 10.0);
  Dataset d;
  d.inputs.resize(n, m);
  d.outputs.resize(n, s);
  for (Index j = 0; j < n; ++j) {
    d.dmu_ids.push_back("D" + std::to_string(j));
    for (Index i = 0; i < m; ++i) d.inputs(j, i) = value(rng);
    for (Index r = 0; r < s; ++r) d.outputs(j, r) = value(rng);
  }
  return d;
}

}  // namespace

TEST(TechnologyProperties, MembershipDisposabilityConvexity) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tech = build_vrs(random_dataset(rng, 6, 2, 2));
    const Dataset& d = tech.dataset();
    for (Index j = 0; j < d.size(); ++j) {
      const Point p = d.dmu(j);
      ASSERT_TRUE(contains(tech, p));
      Point worse = p;
      worse.x[0] += 1.0 + unit(rng);
      worse.y[1] *= unit(rng) + 1e-3;
      EXPECT_TRUE(contains(tech, worse));
      const Point q = d.dmu((j + 1) % d.size());
      EXPECT_TRUE(contains(tech, Point{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}));
    }
  }
}

TEST(TechnologyProperties, PerturbedEfficientCombinationIsNotStrong) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tech = build_vrs(random_dataset(rng, 7, 2, 1));
    const Dataset& d = tech.dataset();
    std::vector<Index> strong;
    for (Index j = 0; j < d.size(); ++j)
      if (classify(tech, d.dmu(j)) == EfficiencyStatus::StronglyEfficient) strong.push_back(j);
    if (strong.size() < 2) continue;
    const double w = unit(rng);
    const Point a = d.dmu(strong[0]), b = d.dmu(strong[1]);
    Point p{w * a.x + (1 - w) * b.x, w * a.y + (1 - w) * b.y};
    p.x[trial % 2] += 0.1 + unit(rng);
    EXPECT_NE(classify(tech, p), EfficiencyStatus::StronglyEfficient);
  }
}
