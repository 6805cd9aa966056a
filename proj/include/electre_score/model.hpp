#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "electre_score/errors.hpp"

namespace electre_score {

enum class Direction { Maximize, Minimize };

/// How a threshold varies with the performance it is anchored to.
///  - Constant: intercept only.
///  - Direct:   anchored to the worse of the two compared performances.
///  - Inverse:  anchored to the better of the two.
enum class ThresholdMode { Constant, Direct, Inverse };

struct ThresholdSpec {
  double intercept = 0.0;
  double slope = 0.0;
  ThresholdMode mode = ThresholdMode::Constant;

  static ThresholdSpec constant(double value) { return {value, 0.0, ThresholdMode::Constant}; }
  static ThresholdSpec direct(double intercept, double slope) {
    return {intercept, slope, ThresholdMode::Direct};
  }
  static ThresholdSpec inverse(double intercept, double slope) {
    return {intercept, slope, ThresholdMode::Inverse};
  }

  /// Affine evaluation at an anchor performance (slope ignored for Constant).
  double evaluate(double anchor) const {
    return mode == ThresholdMode::Constant ? intercept : intercept + slope * anchor;
  }
};

struct Criterion {
  std::string name;
  Direction direction = Direction::Maximize;
  double weight = 1.0;
  ThresholdSpec indifference;
  ThresholdSpec preference;
  std::optional<ThresholdSpec> veto;
  // Verbal scale stored as integer level codes; thresholds are level differences.
  bool ordinal = false;
};

/// The λ cut applied to credibilities; always in ]0.5, 1].
class CuttingLevel {
 public:
  explicit CuttingLevel(double lambda);

  double value() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Raw weights normalized to sum 1. Throws AllZeroWeights when no weight is positive.
std::vector<double> normalize_weights(std::span<const Criterion> criteria);

/// Immutable, validated criterion family shared by every pairwise computation.
///
/// Weights are kept raw (reports echo them); `weights()` returns the normalized
/// vector. `tolerance` widens every classification boundary by an absolute
/// amount and defaults to exact comparisons.
class CriterionSet {
 public:
  explicit CriterionSet(std::vector<Criterion> criteria, double tolerance = 0.0);

  std::size_t size() const noexcept { return criteria_.size(); }
  const Criterion& operator[](std::size_t j) const { return criteria_[j]; }
  auto begin() const noexcept { return criteria_.begin(); }
  auto end() const noexcept { return criteria_.end(); }

  const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
  std::span<const double> weights() const noexcept { return normalized_; }
  double total_weight() const noexcept { return total_weight_; }
  double tolerance() const noexcept { return tolerance_; }
  bool has_veto() const noexcept;

 private:
  std::vector<Criterion> criteria_;
  std::vector<double> normalized_;
  double total_weight_ = 0.0;
  double tolerance_ = 0.0;
};

using PerformanceView = std::span<const double>;

/// An action or limiting profile: an identifier plus one value per criterion.
struct Alternative {
  std::string id;
  std::vector<double> values;

  PerformanceView view() const noexcept { return values; }
};

/// Actions × criteria. Construction only checks that every row has one value per
/// criterion; content invariants are reported by `validate_model`.
class PerformanceTable {
 public:
  PerformanceTable() = default;
  PerformanceTable(std::size_t criterion_count, std::vector<Alternative> actions);

  std::size_t criterion_count() const noexcept { return criterion_count_; }
  std::size_t action_count() const noexcept { return actions_.size(); }
  bool empty() const noexcept { return actions_.empty(); }

  const Alternative& action(std::size_t i) const { return actions_[i]; }
  const std::vector<Alternative>& actions() const noexcept { return actions_; }
  double at(std::size_t action, std::size_t criterion) const {
    return actions_[action].values[criterion];
  }

 private:
  std::size_t criterion_count_ = 0;
  std::vector<Alternative> actions_;
};

/// B_{x_k}: a score and the limiting profiles characterizing it.
struct ReferenceSet {
  double score = 0.0;
  std::vector<Alternative> profiles;
};

/// Ordered collection B_{x_1} … B_{x_ℓ}. Only shape is enforced on construction.
class ReferenceStructure {
 public:
  ReferenceStructure() = default;
  ReferenceStructure(std::size_t criterion_count, std::vector<ReferenceSet> sets);

  std::size_t criterion_count() const noexcept { return criterion_count_; }
  std::size_t level_count() const noexcept { return sets_.size(); }
  const ReferenceSet& set(std::size_t k) const { return sets_[k]; }
  const std::vector<ReferenceSet>& sets() const noexcept { return sets_; }
  double score(std::size_t k) const { return sets_[k].score; }
  std::vector<double> scores() const;
  std::size_t profile_count() const noexcept;

  bool scores_strictly_increasing() const noexcept;

 private:
  std::size_t criterion_count_ = 0;
  std::vector<ReferenceSet> sets_;
};

struct Violation {
  std::string subject;  // criterion, action, or level the finding is about
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Lists every violated type invariant of the criteria, performance table and
/// reference structure. Never throws on content problems.
ValidationReport validate_model(std::span<const Criterion> criteria,
                                const PerformanceTable& table,
                                const ReferenceStructure& refs);

}  // namespace electre_score
