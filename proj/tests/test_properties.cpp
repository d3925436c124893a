#include "property_checks.hpp"

#include <gtest/gtest.h>

namespace {

const std::vector<fixtures::Instance>& instances() {
  static const auto all = fixtures::random_instances(50);
  return all;
}

std::string joined(const properties::Failures& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size() && k < 5; ++k) s += f[k] + "\n";
  return s;
}

}  // namespace

TEST(Properties, MaxRmStrongMonotonicity) {
  std::mt19937_64 rng(1);
  for (const auto& inst : instances()) {
    const auto f = properties::max_rm_strong_monotonicity(inst, rng);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, MaxRmSingleItem) {
  for (const auto& inst : instances()) EXPECT_TRUE(properties::max_rm_single_item(inst).empty());
}

TEST(Properties, MaxRmProjectionOnFacet) {
  for (const auto& inst : instances()) {
    const auto f = properties::max_rm_projection_on_facet(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, RepresentationsAgree) {
  std::mt19937_64 rng(2);
  for (const auto& inst : instances()) {
    const auto f = properties::representations_agree(inst, rng);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, ClosedFormsMatchLp) {
  for (const auto& inst : instances()) {
    const auto f = properties::closed_forms_match_lp(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, MaxSbmZeroInputGrowth) {
  for (const auto& inst : instances()) {
    const auto f = properties::max_sbm_zero_input_growth(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, Sandwich) {
  for (const auto& inst : instances()) {
    const auto f = properties::sandwich(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, MaxRmMatchesSingleMoves) {
  for (const auto& inst : instances()) {
    const auto f = properties::max_rm_matches_single_moves(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, MaxRmReports) {
  for (const auto& inst : instances()) {
    const auto f = properties::max_rm_reports(inst);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}

TEST(Properties, RmOverP) {
  std::mt19937_64 rng(3);
  for (std::size_t k = 0; k < 20; ++k) {
    const auto f = properties::rm_over_p(instances()[k], rng);
    EXPECT_TRUE(f.empty()) << joined(f);
  }
}
