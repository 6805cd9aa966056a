#include <gtest/gtest.h>

#include "electre_score/properties.hpp"
#include "hotel.hpp"

namespace es = electre_score;
namespace pr = electre_score::properties;

namespace {

const es::CuttingLevel kBand(0.72);

es::CriterionSet one_criterion() {
  return es::CriterionSet({{"g", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(1),
                            es::ThresholdSpec::constant(2), {}, false}});
}

es::ReferenceStructure chain(std::size_t levels) {
  std::vector<es::ReferenceSet> sets;
  for (std::size_t k = 0; k < levels; ++k) {
    const double v = 10.0 * static_cast<double>(k);
    sets.push_back({v, {{"b" + std::to_string(k + 1), {v}}}});
  }
  return es::ReferenceStructure(1, sets);
}

}  // namespace

TEST(Properties, GenerationIsDeterministic) {
  const pr::InstanceConfig config;
  const auto a = pr::generate_instance(42, config);
  const auto b = pr::generate_instance(42, config);
  EXPECT_EQ(pr::digest(a), pr::digest(b));
  EXPECT_NE(pr::digest(a), pr::digest(pr::generate_instance(43, config)));
}

TEST(Properties, StrongModeSatisfiesEverySeparabilityFlag) {
  const pr::InstanceConfig config;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = pr::generate_instance(seed, config);
    const auto sep = es::check_separability(inst.refs, inst.criteria, inst.lambda);
    EXPECT_TRUE(sep.strong_dominance && sep.soft_dominance()) << "seed " << seed;
    EXPECT_TRUE(es::validate_basic_assumptions(inst.refs, inst.criteria, inst.lambda).empty())
        << "seed " << seed;
  }
}

TEST(Properties, ApplyEditIsPure) {
  const auto refs = chain(7);
  const auto out = pr::apply_edit(refs, pr::DeleteSet{3});
  EXPECT_EQ(refs.level_count(), 7u);
  ASSERT_EQ(out.level_count(), 6u);
  EXPECT_EQ(out.scores(), (std::vector<double>{0, 10, 20, 40, 50, 60}));

  const auto dup = pr::apply_edit(refs, pr::InsertProfile{2, refs.set(2).profiles[0]});
  EXPECT_EQ(dup.set(2).profiles.size(), 2u);
  EXPECT_TRUE(es::validate_basic_assumptions(dup, one_criterion(), kBand).empty());

  const auto ins = pr::apply_edit(refs, pr::InsertSet{25, {{"n", {25}}}});
  EXPECT_EQ(ins.level_count(), 8u);
  EXPECT_EQ(ins.score(3), 25);
}

TEST(Properties, ApplyEditRejectsBrokenStructures) {
  const auto refs = chain(2);
  auto expect_invalid = [&](const pr::EditOperation& e) {
    try {
      pr::apply_edit(refs, e);
      ADD_FAILURE() << pr::describe(e);
    } catch (const es::Error& err) {
      EXPECT_EQ(err.code(), es::ErrorCode::InvalidEdit) << pr::describe(e);
    }
  };
  expect_invalid(pr::DeleteSet{0});
  expect_invalid(pr::InsertSet{10, {{"n", {5}}}});
  expect_invalid(pr::InsertSet{5, {}});
  expect_invalid(pr::DeleteProfile{0, 0});
  expect_invalid(pr::DeleteProfile{5, 0});
  expect_invalid(pr::InsertProfile{0, {"n", {1, 2}}});
}

TEST(Properties, ConformityVacuousOnTwoLevels) {
  const auto r = pr::check_conformity(chain(2), one_criterion(), kBand);
  EXPECT_EQ(r.status, pr::PropertyStatus::Vacuous);
  EXPECT_EQ(pr::check_conformity(chain(5), one_criterion(), kBand).status, pr::PropertyStatus::Passed);
}

TEST(Properties, HotelDoesNotMeetConformityHypotheses) {
  const test::Hotel h;
  EXPECT_EQ(pr::check_conformity(h.model.refs, h.criteria, kBand).status,
            pr::PropertyStatus::HypothesisNotMet);
  EXPECT_EQ(pr::check_propositions(h.model.refs, h.criteria, kBand, h.table).failures.size(), 0u);
}

TEST(Properties, DeletingTheLowerBoundSetMovesItDownOneLevel) {
  const auto refs = chain(4);
  const auto criteria = one_criterion();
  const es::PerformanceTable actions(1, {{"a", {15}}});
  EXPECT_EQ(es::lower_bound(criteria, actions.action(0).view(), refs, kBand).score, 10);
  const auto after = pr::apply_edit(refs, pr::DeleteSet{1});
  EXPECT_EQ(es::lower_bound(criteria, actions.action(0).view(), after, kBand).score, 0);

  const std::vector<pr::EditOperation> edits{pr::DeleteSet{1}, pr::InsertSet{5, {{"n", {5}}}},
                                              pr::InsertProfile{2, {"c", {20}}}};
  const auto r = pr::check_stability(refs, criteria, kBand, edits, actions);
  EXPECT_EQ(r.status, pr::PropertyStatus::Passed);
  EXPECT_TRUE(r.failures.empty());
}

TEST(Properties, DeckExampleIsADocumentedDiscrepancy) {
  pr::SuiteOptions o;
  o.trials = 1;
  const auto r = pr::run_property("deck_of_cards_example", o);
  EXPECT_EQ(r.status, pr::PropertyStatus::DocumentedDiscrepancy);
  EXPECT_TRUE(r.failures.empty());
}

TEST(Properties, UnknownPropertyThrows) {
  EXPECT_THROW(pr::run_property("nope", {}), es::Error);
}

TEST(Properties, ShrinkKeepsTheFailure) {
  pr::InstanceConfig config;
  config.vary_sizes = false;
  const auto inst = pr::generate_instance(7, config);
  // Any instance with a second criterion "fails"; the minimum keeps exactly two.
  const auto small = pr::shrink(inst, [](const pr::Instance& i) { return i.criteria.size() >= 2; });
  EXPECT_EQ(small.criteria.size(), 2u);
  EXPECT_LE(small.table.action_count(), 1u);
}

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, FiveHundredTrialsWithoutFailure) {
  pr::SuiteOptions o;
  o.trials = 500;
  const auto r = pr::run_property(GetParam(), o);
  EXPECT_NE(r.status, pr::PropertyStatus::Failed);
  ASSERT_TRUE(r.failures.empty()) << r.failures.front().expected << " / " << r.failures.front().observed
                                  << " seed " << r.failures.front().seed;
}

INSTANTIATE_TEST_SUITE_P(Properties, Suite, ::testing::ValuesIn(pr::property_names()),
                         [](const auto& info) { return info.param; });
