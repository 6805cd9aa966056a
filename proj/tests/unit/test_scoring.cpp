#include <gtest/gtest.h>

#include "electre_score/scoring.hpp"
#include "hotel.hpp"

namespace es = electre_score;

namespace {

using S = es::SetRelation;

const es::CuttingLevel kBand(0.72);

}  // namespace

TEST(Scoring, DeckOfCards) {
  const es::DeckOfCards deck{{1, 2, 0, 1, 0, 2}, 0.0, 100.0};
  EXPECT_EQ(es::deck_units(deck), 12);
  EXPECT_NEAR(es::deck_unit(deck), 100.0 / 12, 1e-12);
  const auto x = es::deck_of_cards_scores(deck);
  const std::vector<double> expected{0, 100.0 / 6, 500.0 / 12, 50, 200.0 / 3, 75, 100};
  ASSERT_EQ(x.size(), expected.size());
  for (std::size_t k = 0; k < x.size(); ++k) EXPECT_NEAR(x[k], expected[k], 1e-9);
  EXPECT_EQ(x.back(), 100.0);
  EXPECT_EQ(es::deck_of_cards_scores({{0}, 0.0, 100.0}), (std::vector<double>{0, 100}));
}

TEST(Scoring, GeneralAndFastLevelScans) {
  const std::vector<S> a1{S::ActionPreferred, S::ActionPreferred, S::ActionPreferred, S::Indifferent,
                          S::Indifferent,     S::SetPreferred,    S::SetPreferred};
  EXPECT_EQ(es::general_lower_level(a1), 2u);
  EXPECT_EQ(es::general_upper_level(a1), 5u);
  EXPECT_EQ(es::fast_lower_level(a1), 2u);
  EXPECT_EQ(es::fast_upper_level(a1), 5u);

  // A SetPreferred level below blocks every ActionPreferred level above it.
  const std::vector<S> blocked{S::ActionPreferred, S::SetPreferred, S::ActionPreferred, S::SetPreferred};
  EXPECT_EQ(es::general_lower_level(blocked), 0u);
  EXPECT_EQ(es::fast_lower_level(blocked), 2u);
  EXPECT_EQ(es::general_upper_level(blocked), 3u);

  const std::vector<S> none{S::Indifferent, S::SetPreferred};
  EXPECT_FALSE(es::general_lower_level(none).has_value());
}

TEST(Scoring, HotelBounds) {
  const test::Hotel h;
  const auto& refs = h.model.refs;
  const auto l1 = es::lower_bound(h.criteria, h.action("a1"), refs, kBand);
  EXPECT_EQ(l1.level, 2u);
  EXPECT_NEAR(l1.score, 33.33333, 1e-5);
  const auto l2 = es::lower_bound(h.criteria, h.action("a2"), refs, kBand);
  EXPECT_EQ(l2.level, 3u);
  EXPECT_NEAR(l2.score, 50.0, 1e-12);
  const auto u1 = es::upper_bound(h.criteria, h.action("a1"), refs, kBand);
  EXPECT_NEAR(u1.score, 83.33333, 1e-5);
}

TEST(Scoring, BottomProfileHasNoLowerBound) {
  const test::Hotel h;
  try {
    es::lower_bound(h.criteria, h.profile("b11"), h.model.refs, kBand);
    FAIL() << "expected NoLowerBound";
  } catch (const es::Error& e) {
    EXPECT_EQ(e.code(), es::ErrorCode::NoLowerBound);
  }
}

TEST(Scoring, HotelRangesOnGeneralPath) {
  const test::Hotel h;
  const auto result = es::score_ranges(h.table, h.model.refs, h.criteria, kBand);
  EXPECT_FALSE(result.fast_path);
  ASSERT_EQ(result.ranges.size(), 5u);
  for (const auto& r : result.ranges) {
    EXPECT_TRUE(r.defined()) << r.action;
    EXPECT_LT(r.lower->score, r.upper->score) << r.action;
  }
  EXPECT_NEAR(result.ranges[0].lower->score, 100.0 / 3, 1e-9);
  EXPECT_NEAR(result.ranges[0].upper->score, 250.0 / 3, 1e-9);
}

TEST(Scoring, ProfileScoredAsActionGetsNeighbours) {
  const es::CriterionSet criteria({{"g", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(1),
                                    es::ThresholdSpec::constant(2), {}, false}});
  const es::ReferenceStructure refs(1, {{0, {{"b1", {0}}}}, {10, {{"b2", {10}}}}, {20, {{"b3", {20}}}}});
  const es::PerformanceTable table(1, {{"a", {10}}});
  const auto result = es::score_ranges(table, refs, criteria, kBand);
  EXPECT_TRUE(result.fast_path);
  ASSERT_TRUE(result.ranges[0].defined());
  EXPECT_EQ(result.ranges[0].lower->score, 0);
  EXPECT_EQ(result.ranges[0].upper->score, 20);
}

TEST(Scoring, EmptyTableGivesNoRanges) {
  const test::Hotel h;
  const auto result = es::score_ranges(es::PerformanceTable(5, {}), h.model.refs, h.criteria, kBand);
  EXPECT_TRUE(result.ranges.empty());
}

TEST(Scoring, RefusesBrokenBasicAssumptionsUnlessForced) {
  const es::CriterionSet criteria({{"g", es::Direction::Maximize, 1.0, {}, {}, {}, false}});
  const es::ReferenceStructure refs(1, {{0, {{"b1", {10}}}}, {10, {{"b2", {0}}}}});
  const es::PerformanceTable table(1, {{"a", {5}}});
  EXPECT_THROW(es::score_ranges(table, refs, criteria, kBand), es::Error);
  es::ScoringOptions force;
  force.force = true;
  const auto result = es::score_ranges(table, refs, criteria, kBand, force);
  EXPECT_FALSE(result.basic_violations.empty());
}
