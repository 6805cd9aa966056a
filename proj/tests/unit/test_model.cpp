#include <gtest/gtest.h>

#include "electre_score/model.hpp"
#include "hotel.hpp"

namespace es = electre_score;

TEST(Model, HotelModelHasNoViolations) {
  const test::Hotel h;
  EXPECT_TRUE(es::validate_model(h.model.criteria, h.table, h.model.refs).ok());
}

TEST(Model, RepeatedScoreIsReported) {
  const std::vector<es::ReferenceSet> sets{{10.0, {{"b1", {1.0}}}}, {10.0, {{"b2", {2.0}}}}};
  const es::ReferenceStructure refs(1, sets);
  const std::vector<es::Criterion> criteria{{"g", es::Direction::Maximize, 1.0, {}, {}, {}, false}};
  const auto report = es::validate_model(criteria, es::PerformanceTable(1, {}), refs);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found = found || v.message == "scores not strictly increasing";
  EXPECT_TRUE(found);
}

TEST(Model, DirectThresholdEvaluation) {
  const auto q = es::ThresholdSpec::direct(250, 0.03);
  EXPECT_DOUBLE_EQ(q.evaluate(13000), 640.0);
}

TEST(Model, NormalizeWeights) {
  auto make = [](std::vector<double> w) {
    std::vector<es::Criterion> c;
    for (double x : w) c.push_back({"g" + std::to_string(c.size()), es::Direction::Maximize, x, {}, {}, {}, false});
    return es::normalize_weights(c);
  };
  const auto hotel = make({5, 4, 3, 3, 3});
  const std::vector<double> expected{5.0 / 18, 4.0 / 18, 3.0 / 18, 3.0 / 18, 3.0 / 18};
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(hotel[j], expected[j], 1e-15);
  EXPECT_EQ(make({1}), std::vector<double>{1.0});
  EXPECT_EQ(make({2, 2}), (std::vector<double>{0.5, 0.5}));
}

TEST(Model, AllZeroWeightsThrow) {
  const std::vector<es::Criterion> c{{"g", es::Direction::Maximize, 0.0, {}, {}, {}, false}};
  try {
    es::normalize_weights(c);
    FAIL() << "expected AllZeroWeights";
  } catch (const es::Error& e) {
    EXPECT_EQ(e.code(), es::ErrorCode::AllZeroWeights);
  }
}

TEST(Model, CuttingLevelRange) {
  EXPECT_NO_THROW(es::CuttingLevel(1.0));
  EXPECT_NO_THROW(es::CuttingLevel(0.51));
  EXPECT_THROW(es::CuttingLevel(0.5), es::Error);
  EXPECT_THROW(es::CuttingLevel(1.01), es::Error);
}

TEST(Model, InvertedThresholdsReported) {
  es::Criterion c{"g", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(3),
                  es::ThresholdSpec::constant(1), {}, false};
  const es::ReferenceStructure refs(1, {{0.0, {{"b1", {0.0}}}}, {1.0, {{"b2", {5.0}}}}});
  EXPECT_FALSE(es::validate_model(std::vector{c}, es::PerformanceTable(1, {}), refs).ok());
}
