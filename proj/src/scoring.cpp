#include "electre_score/scoring.hpp"

#include <numeric>
#include <sstream>

namespace electre_score {

namespace {

void check_deck(const DeckOfCards& deck) {
  if (deck.blank_cards.empty()) {
    throw Error(ErrorCode::InvalidArgument, "deck of cards needs at least two levels");
  }
  for (int e : deck.blank_cards) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative blank-card count");
  }
  if (!(deck.low < deck.high)) {
    throw Error(ErrorCode::InvalidArgument, "deck anchors must satisfy low < high");
  }
}

}  // namespace

int deck_units(const DeckOfCards& deck) {
  check_deck(deck);
  return std::accumulate(deck.blank_cards.begin(), deck.blank_cards.end(), 0,
                         [](int acc, int e) { return acc + e + 1; });
}

double deck_unit(const DeckOfCards& deck) {
  return (deck.high - deck.low) / static_cast<double>(deck_units(deck));
}

std::vector<double> deck_of_cards_scores(const DeckOfCards& deck) {
  const int alpha = deck_units(deck);
  const double span = deck.high - deck.low;
  std::vector<double> out{deck.low};
  int cumulative = 0;
  for (std::size_t k = 0; k < deck.blank_cards.size(); ++k) {
    cumulative += deck.blank_cards[k] + 1;
    // Scaling the cumulative count avoids accumulating rounding from u.
    out.push_back(deck.low + span * cumulative / alpha);
  }
  out.back() = deck.high;
  return out;
}

std::optional<std::size_t> general_lower_level(std::span<const SetRelation> levels) {
  // Scanning upward, a level below the candidate that is neither
  // ActionPreferred nor Incomparable disqualifies every higher candidate.
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] == SetRelation::ActionPreferred) best = k;
    if (levels[k] != SetRelation::ActionPreferred && levels[k] != SetRelation::Incomparable) break;
  }
  return best;
}

std::optional<std::size_t> general_upper_level(std::span<const SetRelation> levels) {
  std::optional<std::size_t> best;
  for (std::size_t k = levels.size(); k-- > 0;) {
    if (levels[k] == SetRelation::SetPreferred) best = k;
    if (levels[k] != SetRelation::SetPreferred && levels[k] != SetRelation::Incomparable) break;
  }
  return best;
}

std::optional<std::size_t> fast_lower_level(std::span<const SetRelation> levels) {
  for (std::size_t k = levels.size(); k-- > 0;) {
    if (levels[k] == SetRelation::ActionPreferred) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> fast_upper_level(std::span<const SetRelation> levels) {
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] == SetRelation::SetPreferred) return k;
  }
  return std::nullopt;
}

namespace {

std::optional<Bound> to_bound(std::optional<std::size_t> level, const ReferenceStructure& refs) {
  if (!level) return std::nullopt;
  return Bound{refs.score(*level), *level};
}

BoundMethod resolve(BoundMethod method, const ReferenceStructure& refs,
                    const CriterionSet& criteria, CuttingLevel lambda) {
  if (method != BoundMethod::Auto) return method;
  return check_separability(refs, criteria, lambda).soft_dominance() ? BoundMethod::Fast
                                                                     : BoundMethod::General;
}

}  // namespace

std::optional<Bound> find_lower_bound(std::span<const SetRelation> levels,
                                      const ReferenceStructure& refs, BoundMethod method) {
  if (method == BoundMethod::Auto) {
    throw Error(ErrorCode::InvalidArgument, "Auto bound method must be resolved first");
  }
  return to_bound(method == BoundMethod::Fast ? fast_lower_level(levels)
                                              : general_lower_level(levels),
                  refs);
}

std::optional<Bound> find_upper_bound(std::span<const SetRelation> levels,
                                      const ReferenceStructure& refs, BoundMethod method) {
  if (method == BoundMethod::Auto) {
    throw Error(ErrorCode::InvalidArgument, "Auto bound method must be resolved first");
  }
  return to_bound(method == BoundMethod::Fast ? fast_upper_level(levels)
                                              : general_upper_level(levels),
                  refs);
}

Bound lower_bound(const CriterionSet& criteria, PerformanceView action,
                  const ReferenceStructure& refs, CuttingLevel lambda, BoundMethod method) {
  const auto levels = classify_levels(criteria, action, refs, lambda);
  auto b = find_lower_bound(levels, refs, resolve(method, refs, criteria, lambda));
  if (!b) throw Error(ErrorCode::NoLowerBound, "action is not preferred to any reference set");
  return *b;
}

Bound upper_bound(const CriterionSet& criteria, PerformanceView action,
                  const ReferenceStructure& refs, CuttingLevel lambda, BoundMethod method) {
  const auto levels = classify_levels(criteria, action, refs, lambda);
  auto b = find_upper_bound(levels, refs, resolve(method, refs, criteria, lambda));
  if (!b) throw Error(ErrorCode::NoUpperBound, "no reference set is preferred to the action");
  return *b;
}

namespace {

void post_checks(const ScoreRange& r, const ReferenceStructure& refs,
                 std::vector<ConditionFinding>& out) {
  const auto& cls = r.classification;
  auto add = [&](int condition, std::size_t level, const std::string& what) {
    std::ostringstream os;
    os << "condition " << condition << " violated at level " << level + 1 << " (score "
       << refs.score(level) << "): " << what;
    out.push_back({r.action, condition, level, os.str()});
  };

  if (r.defined() && !(r.lower->score < r.upper->score)) {
    out.push_back({r.action, 0, r.lower->level, "lower bound is not below upper bound"});
  }
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const bool below_or_at_lower = r.lower && k <= r.lower->level;
    const bool at_or_above_upper = r.upper && k >= r.upper->level;
    const bool interior = r.defined() && k > r.lower->level && k < r.upper->level;
    if (below_or_at_lower && cls[k] == SetRelation::SetPreferred) {
      add(2, k, "reference set preferred to the action at or below the lower bound");
    }
    if (at_or_above_upper && cls[k] == SetRelation::ActionPreferred) {
      add(3, k, "action preferred to a reference set at or above the upper bound");
    }
    if (interior && cls[k] == SetRelation::SetPreferred) {
      add(4, k, "reference set preferred to the action inside the range");
    }
    if (interior && cls[k] == SetRelation::ActionPreferred) {
      add(5, k, "action preferred to a reference set inside the range");
    }
    if (interior && cls[k] != SetRelation::Indifferent && cls[k] != SetRelation::Incomparable) {
      add(6, k, "interior level is neither indifferent nor incomparable");
    }
    const bool neutral = cls[k] == SetRelation::Indifferent || cls[k] == SetRelation::Incomparable;
    if (r.defined() && neutral && !interior) {
      add(9, k, "indifferent or incomparable level lies outside the range");
    }
  }
}

}  // namespace

ScoreRange score_action(const std::string& id, std::vector<SetRelation> classification,
                        const ReferenceStructure& refs, BoundMethod method,
                        std::vector<ConditionFinding>* findings) {
  ScoreRange r;
  r.action = id;
  r.classification = std::move(classification);
  r.lower = find_lower_bound(r.classification, refs, method);
  r.upper = find_upper_bound(r.classification, refs, method);
  if (!r.lower) r.errors.push_back("NoLowerBound: " + id + " is not preferred to any reference set");
  if (!r.upper) r.errors.push_back("NoUpperBound: no reference set is preferred to " + id);
  if (findings) post_checks(r, refs, *findings);
  return r;
}

ScoringResult score_ranges(const PerformanceTable& table, const ReferenceStructure& refs,
                           const CriterionSet& criteria, CuttingLevel lambda,
                           const ScoringOptions& options) {
  if (refs.level_count() < 2 || !refs.scores_strictly_increasing()) {
    throw Error(ErrorCode::InvalidArgument,
                "reference structure needs >= 2 levels with strictly increasing scores");
  }
  ScoringResult result;
  result.basic_violations = validate_basic_assumptions(refs, criteria, lambda);
  if (!result.basic_violations.empty() && !options.force) {
    throw Error(ErrorCode::BasicAssumptionViolated,
                result.basic_violations.front().describe(refs));
  }
  result.separability = check_separability(refs, criteria, lambda);
  BoundMethod method = options.method;
  if (method == BoundMethod::Auto) {
    method = result.separability.soft_dominance() ? BoundMethod::Fast : BoundMethod::General;
  }
  result.fast_path = method == BoundMethod::Fast;

  result.ranges.reserve(table.action_count());
  for (const auto& a : table.actions()) {
    result.ranges.push_back(score_action(a.id, classify_levels(criteria, a.view(), refs, lambda),
                                         refs, method, &result.findings));
  }
  return result;
}

}  // namespace electre_score
