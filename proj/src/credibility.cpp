#include "electre_score/credibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace electre_score {

std::string_view to_string(CriterionRelation r) {
  switch (r) {
    case CriterionRelation::StrictPrefA: return "StrictPrefA";
    case CriterionRelation::WeakPrefA: return "WeakPrefA";
    case CriterionRelation::Indifferent: return "Indifferent";
    case CriterionRelation::WeakPrefB: return "WeakPrefB";
    case CriterionRelation::StrictPrefB: return "StrictPrefB";
  }
  return "?";
}

std::string_view to_string(DerivedRelation r) {
  switch (r) {
    case DerivedRelation::APreferred: return "APreferred";
    case DerivedRelation::BPreferred: return "BPreferred";
    case DerivedRelation::Indifferent: return "Indifferent";
    case DerivedRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

double advantage(const Criterion& criterion, double ga, double gb) {
  return criterion.direction == Direction::Maximize ? ga - gb : gb - ga;
}

double threshold_at(const ThresholdSpec& spec, const Criterion& criterion, double ga, double gb) {
  const bool maximize = criterion.direction == Direction::Maximize;
  double anchor = 0.0;
  switch (spec.mode) {
    case ThresholdMode::Constant: break;
    case ThresholdMode::Direct: anchor = maximize ? std::min(ga, gb) : std::max(ga, gb); break;
    case ThresholdMode::Inverse: anchor = maximize ? std::max(ga, gb) : std::min(ga, gb); break;
  }
  const double value = spec.evaluate(anchor);
  if (value < 0.0) {
    std::ostringstream os;
    os << "threshold on criterion '" << criterion.name << "' evaluates to " << value;
    throw Error(ErrorCode::NegativeThreshold, os.str());
  }
  return value;
}

namespace {

struct Discrimination {
  double q;
  double p;
};

Discrimination discrimination_at(const Criterion& c, double ga, double gb) {
  const double q = threshold_at(c.indifference, c, ga, gb);
  const double p = threshold_at(c.preference, c, ga, gb);
  if (q > p) {
    std::ostringstream os;
    os << "criterion '" << c.name << "': indifference " << q << " exceeds preference " << p;
    throw Error(ErrorCode::InvertedThresholds, os.str());
  }
  return {q, p};
}

}  // namespace

CriterionRelation per_criterion_relation(const Criterion& criterion, double ga, double gb,
                                         double tolerance) {
  const auto [q, p] = discrimination_at(criterion, ga, gb);
  const double delta = advantage(criterion, ga, gb);
  if (std::abs(delta) <= q + tolerance) return CriterionRelation::Indifferent;
  if (delta > 0.0) {
    return delta <= p + tolerance ? CriterionRelation::WeakPrefA : CriterionRelation::StrictPrefA;
  }
  return -delta <= p + tolerance ? CriterionRelation::WeakPrefB : CriterionRelation::StrictPrefB;
}

double concordance(const CriterionSet& criteria, PerformanceView a, PerformanceView b) {
  const double tol = criteria.tolerance();
  // Accumulate raw weights and divide once, so a fully concordant pair gives exactly 1.
  double raw = 0.0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const auto& c = criteria[j];
    const auto [q, p] = discrimination_at(c, a[j], b[j]);
    const double delta = advantage(c, a[j], b[j]);
    if (delta >= -(q + tol)) {
      raw += c.weight;
    } else if (delta >= -(p + tol)) {
      if (!(p > q)) {
        throw Error(ErrorCode::DegenerateInterval,
                    "criterion '" + c.name + "': pair classified in an empty weak-preference zone");
      }
      const double phi = std::clamp((delta + p) / (p - q), 0.0, 1.0);
      raw += phi * c.weight;
    }
  }
  return std::clamp(raw / criteria.total_weight(), 0.0, 1.0);
}

double discordance(const Criterion& criterion, double ga, double gb, double tolerance) {
  if (!criterion.veto) return 0.0;
  const double p = threshold_at(criterion.preference, criterion, ga, gb);
  const double v = threshold_at(*criterion.veto, criterion, ga, gb);
  if (!(v > p)) {
    std::ostringstream os;
    os << "criterion '" << criterion.name << "': veto " << v << " not above preference " << p;
    throw Error(ErrorCode::InvalidVeto, os.str());
  }
  const double delta = advantage(criterion, ga, gb);
  if (delta >= -(p + tolerance)) return 0.0;
  if (delta < -(v + tolerance)) return 1.0;
  return std::clamp((delta + p) / (p - v), 0.0, 1.0);
}

double credibility(const CriterionSet& criteria, PerformanceView a, PerformanceView b) {
  const double c = concordance(criteria, a, b);
  double sigma = c;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const double d = discordance(criteria[j], a[j], b[j], criteria.tolerance());
    // d <= 1, so d > c implies c < 1.
    if (d > c) sigma *= (1.0 - d) / (1.0 - c);
  }
  return std::clamp(sigma, 0.0, 1.0);
}

bool crisp_outranks(double sigma, CuttingLevel lambda) { return sigma >= lambda.value(); }

DerivedRelation derived_relation(bool a_outranks_b, bool b_outranks_a) {
  if (a_outranks_b && b_outranks_a) return DerivedRelation::Indifferent;
  if (a_outranks_b) return DerivedRelation::APreferred;
  if (b_outranks_a) return DerivedRelation::BPreferred;
  return DerivedRelation::Incomparable;
}

DerivedRelation compare(double sigma_ab, double sigma_ba, CuttingLevel lambda) {
  return derived_relation(crisp_outranks(sigma_ab, lambda), crisp_outranks(sigma_ba, lambda));
}

DerivedRelation compare(const CriterionSet& criteria, PerformanceView a, PerformanceView b,
                        CuttingLevel lambda) {
  return compare(credibility(criteria, a, b), credibility(criteria, b, a), lambda);
}

bool dominates(const CriterionSet& criteria, PerformanceView a, PerformanceView b) {
  const double tol = criteria.tolerance();
  bool strict = false;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const double delta = advantage(criteria[j], a[j], b[j]);
    if (delta < -tol) return false;
    if (delta > tol) strict = true;
  }
  return strict;
}

CredibilityMatrix CredibilityMatrix::build(const CriterionSet& criteria,
                                           const PerformanceTable& table,
                                           const ReferenceStructure& refs) {
  std::vector<const Alternative*> rows;
  for (const auto& a : table.actions()) rows.push_back(&a);
  for (const auto& s : refs.sets()) {
    for (const auto& p : s.profiles) rows.push_back(&p);
  }

  CredibilityMatrix m;
  const std::size_t n = rows.size();
  m.ids_.reserve(n);
  for (const auto* r : rows) m.ids_.push_back(r->id);
  m.sigma_.assign(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i != k) m.sigma_[i * n + k] = credibility(criteria, rows[i]->view(), rows[k]->view());
    }
  }
  return m;
}

std::size_t CredibilityMatrix::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error(ErrorCode::InvalidArgument, "unknown entity '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

}  // namespace electre_score
