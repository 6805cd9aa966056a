#include <gtest/gtest.h>

#include <sstream>

#include "electre_score/credibility.hpp"
#include "hotel.hpp"

namespace es = electre_score;

namespace {

es::Criterion maximize(double q, double p, std::optional<double> v = std::nullopt) {
  es::Criterion c{"g", es::Direction::Maximize, 1.0, es::ThresholdSpec::constant(q),
                  es::ThresholdSpec::constant(p), {}, false};
  if (v) c.veto = es::ThresholdSpec::constant(*v);
  return c;
}

}  // namespace

TEST(Credibility, Advantage) {
  es::Criterion minimize{"g1", es::Direction::Minimize, 1.0, {}, {}, {}, false};
  EXPECT_DOUBLE_EQ(es::advantage(minimize, 13000, 18000), 5000);
  EXPECT_DOUBLE_EQ(es::advantage(maximize(0, 0), 7, 7), 0);
  EXPECT_DOUBLE_EQ(es::advantage(maximize(0, 0), 4, 1), 3);
}

TEST(Credibility, ThresholdAnchoring) {
  const test::Hotel h;
  const auto& g1 = h.criteria[0];
  EXPECT_DOUBLE_EQ(es::threshold_at(g1.indifference, g1, 13000, 14250), 250 + 0.03 * 14250);
  EXPECT_DOUBLE_EQ(es::threshold_at(g1.indifference, g1, 14250, 13000), 677.5);
  const auto inv = es::ThresholdSpec::inverse(250, 0.03);
  EXPECT_DOUBLE_EQ(es::threshold_at(inv, g1, 13000, 14250), 250 + 0.03 * 13000);
  const auto c = maximize(1, 2);
  EXPECT_DOUBLE_EQ(es::threshold_at(c.indifference, c, 3, 900), 1);
  EXPECT_DOUBLE_EQ(es::threshold_at(es::ThresholdSpec::constant(0), c, 3, 4), 0);
}

TEST(Credibility, PerCriterionRelation) {
  const auto c = maximize(1, 2);
  EXPECT_EQ(es::per_criterion_relation(c, 4, 1), es::CriterionRelation::StrictPrefA);
  EXPECT_EQ(es::per_criterion_relation(c, 4, 5), es::CriterionRelation::Indifferent);
  EXPECT_EQ(es::per_criterion_relation(c, 3, 3), es::CriterionRelation::Indifferent);
  EXPECT_EQ(es::per_criterion_relation(c, 5, 3), es::CriterionRelation::WeakPrefA);
  EXPECT_EQ(es::per_criterion_relation(c, 3, 5), es::CriterionRelation::WeakPrefB);
  EXPECT_EQ(es::per_criterion_relation(c, 1, 4), es::CriterionRelation::StrictPrefB);
}

TEST(Credibility, HotelConcordance) {
  const test::Hotel h;
  EXPECT_DOUBLE_EQ(es::concordance(h.criteria, h.action("a1"), h.profile("b31")), 1.0);
  EXPECT_NEAR(es::concordance(h.criteria, h.profile("b31"), h.action("a1")), 7.0 / 18, 1e-12);
  EXPECT_DOUBLE_EQ(es::concordance(h.criteria, h.action("a3"), h.action("a3")), 1.0);
}

TEST(Credibility, Discordance) {
  const auto c = maximize(1, 2, 4);
  EXPECT_DOUBLE_EQ(es::discordance(c, 0, 3), 0.5);
  EXPECT_DOUBLE_EQ(es::discordance(c, 0, 2), 0.0);
  EXPECT_DOUBLE_EQ(es::discordance(c, 0, 4), 1.0);
  EXPECT_DOUBLE_EQ(es::discordance(c, 0, 5), 1.0);
  EXPECT_DOUBLE_EQ(es::discordance(maximize(1, 2), 0, 50), 0.0);
}

TEST(Credibility, VetoAnnihilates) {
  // Two criteria of equal weight; the second fully vetoes and c = 0.5.
  std::vector<es::Criterion> list{maximize(0, 0), maximize(1, 2, 4)};
  list[1].name = "h";
  const es::CriterionSet criteria(list);
  const std::vector<double> a{10, 0};
  const std::vector<double> b{0, 10};
  EXPECT_DOUBLE_EQ(es::concordance(criteria, a, b), 0.5);
  EXPECT_DOUBLE_EQ(es::credibility(criteria, a, b), 0.0);
}

TEST(Credibility, PartialVetoProduct) {
  // c = 0.5 (first criterion only), d = 0.75 on the second: σ = 0.5·0.25/0.5.
  std::vector<es::Criterion> list{maximize(0, 0), maximize(0, 2, 6)};
  list[1].name = "h";
  const es::CriterionSet criteria(list);
  const std::vector<double> a{10, 0};
  const std::vector<double> b{0, 5};
  EXPECT_DOUBLE_EQ(es::credibility(criteria, a, b), 0.25);
}

TEST(Credibility, HotelCredibility) {
  const test::Hotel h;
  EXPECT_EQ(es::credibility(h.criteria, h.action("a1"), h.profile("b11")), 1.0);
  EXPECT_NEAR(es::credibility(h.criteria, h.profile("b41"), h.action("a1")), 13.0 / 18, 1e-12);
}

TEST(Credibility, CrispOutranking) {
  EXPECT_TRUE(es::crisp_outranks(1.0, es::CuttingLevel(1.0)));
  EXPECT_FALSE(es::crisp_outranks(7.0 / 18, es::CuttingLevel(0.7)));
  EXPECT_TRUE(es::crisp_outranks(0.7, es::CuttingLevel(0.7)));
}

TEST(Credibility, DerivedRelations) {
  using R = es::DerivedRelation;
  EXPECT_EQ(es::derived_relation(true, false), R::APreferred);
  EXPECT_EQ(es::derived_relation(false, true), R::BPreferred);
  EXPECT_EQ(es::derived_relation(true, true), R::Indifferent);
  EXPECT_EQ(es::derived_relation(false, false), R::Incomparable);

  const test::Hotel h;
  const es::CuttingLevel l(0.7);
  EXPECT_EQ(es::compare(h.criteria, h.action("a1"), h.profile("b31"), l), R::APreferred);
  EXPECT_EQ(es::compare(h.criteria, h.action("a2"), h.action("a2"), l), R::Indifferent);
  EXPECT_EQ(es::compare(h.criteria, h.action("a1"), h.profile("b42"), l), R::Indifferent);
  EXPECT_NEAR(es::credibility(h.criteria, h.profile("b42"), h.action("a1")), 0.953704, 1e-6);
}

TEST(Credibility, Dominance) {
  const test::Hotel h;
  EXPECT_TRUE(es::dominates(h.criteria, h.action("a1"), h.profile("b11")));
  EXPECT_FALSE(es::dominates(h.criteria, h.action("a1"), h.action("a1")));
  EXPECT_FALSE(es::dominates(h.criteria, h.profile("b31"), h.profile("b21")));
}

TEST(Credibility, MatrixMatchesOracle) {
  const test::Hotel h;
  const auto m = es::CredibilityMatrix::build(h.criteria, h.table, h.model.refs);
  const auto lines = electre_score::io::read_file(test::fixture("hotel_sigma_oracle.csv"));
  std::istringstream in(lines);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string from, to, num, den, value;
    std::getline(row, from, ',');
    std::getline(row, to, ',');
    std::getline(row, num, ',');
    std::getline(row, den, ',');
    std::getline(row, value, ',');
    EXPECT_NEAR(m.sigma(from, to), std::stod(num) / std::stod(den), 1e-12) << from << " -> " << to;
    ++rows;
  }
  EXPECT_EQ(rows, 2u * 5u * 10u);
}
