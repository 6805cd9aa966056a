#include <gtest/gtest.h>

#include "electre_score/refsets.hpp"
#include "hotel.hpp"

namespace es = electre_score;

namespace {

using R = es::DerivedRelation;
using S = es::SetRelation;

const es::CuttingLevel kBand(0.72);

es::CriterionSet two_criteria() {
  return es::CriterionSet({{"g", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(1),
                            es::ThresholdSpec::constant(2), {}, false},
                           {"h", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(1),
                            es::ThresholdSpec::constant(2), {}, false}});
}

es::ReferenceStructure singletons(std::vector<std::vector<double>> rows) {
  std::vector<es::ReferenceSet> sets;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    sets.push_back({10.0 * static_cast<double>(k), {{"b" + std::to_string(k + 1), rows[k]}}});
  }
  return es::ReferenceStructure(2, sets);
}

}  // namespace

TEST(Refsets, ClassifyFromMultiset) {
  EXPECT_EQ(es::classify_relations(std::vector{R::APreferred, R::BPreferred}).classification,
            S::Incomparable);
  const auto ap = es::classify_relations(std::vector{R::APreferred, R::Indifferent, R::Incomparable});
  EXPECT_EQ(ap.classification, S::ActionPreferred);
  EXPECT_TRUE(ap.action_preferred);
  EXPECT_TRUE(ap.action_outranks);
  EXPECT_FALSE(ap.set_outranks);
  EXPECT_EQ(es::classify_relations(std::vector{R::BPreferred, R::Incomparable}).classification,
            S::SetPreferred);
  const auto ind = es::classify_relations(std::vector{R::Indifferent, R::Incomparable});
  EXPECT_EQ(ind.classification, S::Indifferent);
  EXPECT_TRUE(ind.action_outranks && ind.set_outranks && ind.indifferent);
  EXPECT_EQ(es::classify_relations(std::vector{R::Incomparable}).classification, S::Incomparable);
  EXPECT_THROW(es::classify_relations(std::span<const R>{}), es::Error);
}

TEST(Refsets, HotelActionAgainstSets) {
  const test::Hotel h;
  const auto& refs = h.model.refs;
  EXPECT_EQ(es::classify_action_vs_set(h.criteria, h.action("a1"), refs.set(2), kBand).classification,
            S::ActionPreferred);
  EXPECT_EQ(es::classify_action_vs_set(h.criteria, h.action("a1"), refs.set(5), kBand).classification,
            S::SetPreferred);
  EXPECT_EQ(es::classify_action_vs_set(h.criteria, h.action("a1"), refs.set(3), es::CuttingLevel(0.7))
                .classification,
            S::Indifferent);
  const auto levels = es::classify_levels(h.criteria, h.action("a1"), refs, kBand);
  const std::vector<S> expected{S::ActionPreferred, S::ActionPreferred, S::ActionPreferred,
                                S::Indifferent,     S::Indifferent,     S::SetPreferred,
                                S::SetPreferred};
  EXPECT_EQ(levels, expected);
}

TEST(Refsets, BasicAssumptions) {
  const test::Hotel h;
  EXPECT_TRUE(es::validate_basic_assumptions(h.model.refs, h.criteria, kBand).empty());

  const auto criteria = two_criteria();
  EXPECT_TRUE(es::validate_basic_assumptions(singletons({{0, 0}, {5, 5}, {10, 10}}), criteria, kBand).empty());

  const es::ReferenceStructure dup(2, {{0.0, {{"b1", {3, 3}}}}, {1.0, {{"b2", {3, 3}}}}});
  EXPECT_TRUE(es::validate_basic_assumptions(dup, criteria, kBand).empty());

  const auto reversed = es::validate_basic_assumptions(singletons({{10, 10}, {0, 0}}), criteria, kBand);
  ASSERT_EQ(reversed.size(), 1u);
  EXPECT_EQ(reversed[0].clause, es::BasicAssumptionViolation::Clause::AcrossSets);

  const es::ReferenceStructure within(2, {{0.0, {{"b1", {0, 0}}, {"b2", {10, 10}}}}, {1.0, {{"b3", {20, 20}}}}});
  const auto w = es::validate_basic_assumptions(within, criteria, kBand);
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(w[0].clause, es::BasicAssumptionViolation::Clause::WithinSet);
}

TEST(Refsets, HotelPrimalSoftDominanceFailsBetweenSecondAndThird) {
  const test::Hotel h;
  const auto report = es::check_separability(h.model.refs, h.criteria, kBand);
  EXPECT_FALSE(report.soft_dominance_primal);
  bool seen = false;
  for (const auto& p : report.pairs) {
    if (p.lower == 1 && p.upper == 2) {
      seen = true;
      EXPECT_FALSE(p.soft_dominance_primal);
      EXPECT_FALSE(p.strong_dominance);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Refsets, SeparabilityOnTrivialCollections) {
  const auto criteria = two_criteria();
  const auto up = es::check_separability(singletons({{0, 0}, {10, 10}}), criteria, kBand);
  EXPECT_TRUE(up.strong_dominance && up.soft_dominance() && up.strong_preference && up.soft_preference());

  const auto down = es::check_separability(singletons({{10, 10}, {0, 0}}), criteria, kBand);
  EXPECT_FALSE(down.strong_dominance);
  EXPECT_FALSE(down.soft_dominance_primal);
  EXPECT_FALSE(down.soft_dominance_dual);
}

TEST(Refsets, Comparability) {
  const test::Hotel h;
  const auto all = es::check_comparability(h.table, h.model.refs, h.criteria, kBand);
  EXPECT_EQ(all, std::vector<bool>(5, true));

  const auto& top = h.model.refs.set(6).profiles[0].values;
  auto above = top;
  above[0] -= 500;  // g1 is minimized
  const es::PerformanceTable edge(5, {{"same", top}, {"above", above}});
  EXPECT_EQ(es::check_comparability(edge, h.model.refs, h.criteria, kBand), (std::vector<bool>{false, false}));
}
