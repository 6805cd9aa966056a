#include "electre_score/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace electre_score {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::NegativeThreshold: return "NegativeThreshold";
    case ErrorCode::InvertedThresholds: return "InvertedThresholds";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::InvalidVeto: return "InvalidVeto";
    case ErrorCode::NoLowerBound: return "NoLowerBound";
    case ErrorCode::NoUpperBound: return "NoUpperBound";
    case ErrorCode::BasicAssumptionViolated: return "BasicAssumptionViolated";
    case ErrorCode::InvalidEdit: return "InvalidEdit";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

CuttingLevel::CuttingLevel(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.5 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "cutting level " << lambda << " outside ]0.5, 1]";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

std::vector<double> normalize_weights(std::span<const Criterion> criteria) {
  double total = 0.0;
  for (const auto& c : criteria) {
    if (c.weight < 0.0 || !std::isfinite(c.weight)) {
      throw Error(ErrorCode::InvalidArgument, "criterion '" + c.name + "' has an invalid weight");
    }
    total += c.weight;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::AllZeroWeights, "every criterion weight is zero");
  std::vector<double> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.weight / total);
  return out;
}

CriterionSet::CriterionSet(std::vector<Criterion> criteria, double tolerance)
    : criteria_(std::move(criteria)), tolerance_(tolerance) {
  if (criteria_.empty()) throw Error(ErrorCode::InvalidArgument, "no criteria");
  if (tolerance_ < 0.0 || !std::isfinite(tolerance_)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be a finite nonnegative number");
  }
  normalized_ = normalize_weights(criteria_);
  for (const auto& c : criteria_) total_weight_ += c.weight;
}

bool CriterionSet::has_veto() const noexcept {
  return std::any_of(criteria_.begin(), criteria_.end(),
                     [](const Criterion& c) { return c.veto.has_value(); });
}

PerformanceTable::PerformanceTable(std::size_t criterion_count, std::vector<Alternative> actions)
    : criterion_count_(criterion_count), actions_(std::move(actions)) {
  for (const auto& a : actions_) {
    if (a.values.size() != criterion_count_) {
      throw Error(ErrorCode::InvalidArgument,
                  "action '" + a.id + "' does not have one value per criterion");
    }
  }
}

ReferenceStructure::ReferenceStructure(std::size_t criterion_count, std::vector<ReferenceSet> sets)
    : criterion_count_(criterion_count), sets_(std::move(sets)) {
  for (const auto& s : sets_) {
    for (const auto& p : s.profiles) {
      if (p.values.size() != criterion_count_) {
        throw Error(ErrorCode::InvalidArgument,
                    "profile '" + p.id + "' does not have one value per criterion");
      }
    }
  }
}

std::vector<double> ReferenceStructure::scores() const {
  std::vector<double> out;
  out.reserve(sets_.size());
  for (const auto& s : sets_) out.push_back(s.score);
  return out;
}

std::size_t ReferenceStructure::profile_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sets_) n += s.profiles.size();
  return n;
}

bool ReferenceStructure::scores_strictly_increasing() const noexcept {
  for (std::size_t k = 1; k < sets_.size(); ++k) {
    if (!(sets_[k - 1].score < sets_[k].score)) return false;
  }
  return true;
}

namespace {

bool is_integer(double v) { return std::isfinite(v) && std::floor(v) == v; }

void check_threshold(const Criterion& c, const ThresholdSpec& spec, std::string_view label,
                     double lo, double hi, std::vector<Violation>& out) {
  if (spec.mode == ThresholdMode::Constant && spec.slope != 0.0) {
    out.push_back({c.name, std::string(label) + " threshold is Constant but has a nonzero slope"});
  }
  if (!std::isfinite(spec.intercept) || !std::isfinite(spec.slope)) {
    out.push_back({c.name, std::string(label) + " threshold is not finite"});
    return;
  }
  if (spec.evaluate(lo) < 0.0 || spec.evaluate(hi) < 0.0) {
    out.push_back({c.name, std::string(label) + " threshold is negative on the observed range"});
  }
  if (c.ordinal && (!is_integer(spec.intercept) || spec.slope != 0.0)) {
    out.push_back({c.name, std::string(label) +
                               " threshold on an ordinal criterion is not a whole number of levels"});
  }
}

}  // namespace

ValidationReport validate_model(std::span<const Criterion> criteria, const PerformanceTable& table,
                                const ReferenceStructure& refs) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t n = criteria.size();

  if (n == 0) out.push_back({"criteria", "no criteria defined"});

  std::set<std::string> names;
  bool any_positive = false;
  for (const auto& c : criteria) {
    if (!names.insert(c.name).second) out.push_back({c.name, "duplicate criterion name"});
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) out.push_back({c.name, "weight must be >= 0"});
    if (c.weight > 0.0) any_positive = true;
  }
  if (n > 0 && !any_positive) out.push_back({"criteria", "every criterion weight is zero"});

  if (table.criterion_count() != n && !table.empty()) {
    out.push_back({"performance table", "column count does not match the criteria"});
  }
  if (refs.criterion_count() != n && refs.level_count() > 0) {
    out.push_back({"reference structure", "profile length does not match the criteria"});
  }

  std::set<std::string> ids;
  for (const auto& a : table.actions()) {
    if (!ids.insert(a.id).second) out.push_back({a.id, "duplicate action identifier"});
    for (double v : a.values) {
      if (!std::isfinite(v)) out.push_back({a.id, "performance is not finite"});
    }
  }

  if (refs.level_count() < 2) out.push_back({"reference structure", "fewer than two reference sets"});
  for (std::size_t k = 0; k < refs.level_count(); ++k) {
    const auto& s = refs.set(k);
    const std::string level = "level " + std::to_string(k + 1);
    if (!std::isfinite(s.score)) out.push_back({level, "score is not finite"});
    if (k > 0 && !(refs.score(k - 1) < s.score)) {
      out.push_back({level, "scores not strictly increasing"});
    }
    if (s.profiles.empty()) out.push_back({level, "reference set has no profiles"});
    for (const auto& p : s.profiles) {
      for (double v : p.values) {
        if (!std::isfinite(v)) out.push_back({p.id, "profile value is not finite"});
      }
    }
  }

  if (table.criterion_count() != n && !table.empty()) return report;
  if (refs.criterion_count() != n && refs.level_count() > 0) return report;

  // Thresholds are affine in the anchor, so checking the extremes of the
  // observed range covers every observed performance.
  for (std::size_t j = 0; j < n; ++j) {
    const auto& c = criteria[j];
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    auto observe = [&](double v) {
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    };
    for (const auto& a : table.actions()) observe(a.values[j]);
    for (const auto& s : refs.sets()) {
      for (const auto& p : s.profiles) observe(p.values[j]);
    }
    if (lo > hi) lo = hi = 0.0;

    check_threshold(c, c.indifference, "indifference", lo, hi, out);
    check_threshold(c, c.preference, "preference", lo, hi, out);
    if (c.veto) check_threshold(c, *c.veto, "veto", lo, hi, out);

    for (double g : {lo, hi}) {
      const double q = c.indifference.evaluate(g);
      const double p = c.preference.evaluate(g);
      if (q > p) {
        out.push_back({c.name, "indifference threshold exceeds preference threshold at " +
                                   std::to_string(g)});
      }
      if (c.veto && !(p < c.veto->evaluate(g))) {
        out.push_back({c.name, "veto threshold not above preference threshold at " +
                                   std::to_string(g)});
      }
    }
  }
  return report;
}

}  // namespace electre_score
