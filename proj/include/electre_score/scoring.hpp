#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "electre_score/model.hpp"
#include "electre_score/refsets.hpp"

namespace electre_score {

/// Deck-of-cards elicitation: ordered levels, blank cards between consecutive
/// levels, and the two anchor scores for the bottom and top level.
struct DeckOfCards {
  std::vector<int> blank_cards;  // ℓ − 1 entries, each >= 0
  double low = 0.0;
  double high = 100.0;

  std::size_t level_count() const noexcept { return blank_cards.size() + 1; }
};

/// Number of units α between the bottom and top level.
int deck_units(const DeckOfCards& deck);

/// Value of one unit, (high − low) / α.
double deck_unit(const DeckOfCards& deck);

/// Cumulative scores x_1 = low, x_{k+1} = x_k + (e_k + 1)·u; x_ℓ is `high` exactly.
std::vector<double> deck_of_cards_scores(const DeckOfCards& deck);

struct Bound {
  double score = 0.0;
  std::size_t level = 0;

  friend bool operator==(const Bound&, const Bound&) = default;
};

enum class BoundMethod {
  General,  // full definition, including the clause over the other levels
  Fast,     // only valid under primal and dual soft dominance
  Auto,     // Fast when the collection passes soft dominance, General otherwise
};

/// Highest level classified ActionPreferred whose lower levels are all
/// ActionPreferred or Incomparable.
std::optional<std::size_t> general_lower_level(std::span<const SetRelation> levels);
/// Lowest level classified SetPreferred whose higher levels are all
/// SetPreferred or Incomparable.
std::optional<std::size_t> general_upper_level(std::span<const SetRelation> levels);
std::optional<std::size_t> fast_lower_level(std::span<const SetRelation> levels);
std::optional<std::size_t> fast_upper_level(std::span<const SetRelation> levels);

std::optional<Bound> find_lower_bound(std::span<const SetRelation> levels,
                                      const ReferenceStructure& refs,
                                      BoundMethod method = BoundMethod::General);
std::optional<Bound> find_upper_bound(std::span<const SetRelation> levels,
                                      const ReferenceStructure& refs,
                                      BoundMethod method = BoundMethod::General);

/// Throws NoLowerBound when no level qualifies. Auto is resolved with check_separability.
Bound lower_bound(const CriterionSet& criteria, PerformanceView action,
                  const ReferenceStructure& refs, CuttingLevel lambda,
                  BoundMethod method = BoundMethod::General);
/// Throws NoUpperBound when no level qualifies.
Bound upper_bound(const CriterionSet& criteria, PerformanceView action,
                  const ReferenceStructure& refs, CuttingLevel lambda,
                  BoundMethod method = BoundMethod::General);

/// A post-hoc check on a produced range that did not hold.
struct ConditionFinding {
  std::string action;
  int condition = 0;  // 2..6 and 9 as numbered in the method; 0 = bounds not ordered
  std::size_t level = 0;
  std::string message;
};

struct ScoreRange {
  std::string action;
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  std::vector<SetRelation> classification;  // one per reference level
  std::vector<std::string> errors;          // NoLowerBound / NoUpperBound messages

  bool defined() const noexcept { return lower.has_value() && upper.has_value(); }
};

struct ScoringOptions {
  bool force = false;  // run even when the basic assumptions are violated
  BoundMethod method = BoundMethod::Auto;
};

struct ScoringResult {
  std::vector<ScoreRange> ranges;
  std::vector<ConditionFinding> findings;
  std::vector<BasicAssumptionViolation> basic_violations;
  SeparabilityReport separability;
  bool fast_path = false;
};

/// One open range per action. Refuses (BasicAssumptionViolated) when the
/// reference structure breaks the basic assumptions, unless `force` is set.
ScoringResult score_ranges(const PerformanceTable& table, const ReferenceStructure& refs,
                           const CriterionSet& criteria, CuttingLevel lambda,
                           const ScoringOptions& options = {});

/// Range computation for a single action from its level classification; also
/// appends the post-hoc condition findings.
ScoreRange score_action(const std::string& id, std::vector<SetRelation> classification,
                        const ReferenceStructure& refs, BoundMethod method,
                        std::vector<ConditionFinding>* findings = nullptr);

}  // namespace electre_score
