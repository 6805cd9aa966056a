#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "electre_score/credibility.hpp"
#include "electre_score/model.hpp"

namespace electre_score {

enum class SetRelation { ActionPreferred, SetPreferred, Indifferent, Incomparable };

std::string_view to_string(SetRelation r);

/// Relation of an action a against one reference set B.
struct ActionSetRelation {
  SetRelation classification = SetRelation::Incomparable;
  bool action_outranks = false;   // a ≿ B
  bool set_outranks = false;      // B ≿ a
  bool action_preferred = false;  // a ≻ B
  bool set_preferred = false;     // B ≻ a
  bool indifferent = false;       // a ∼ B
  bool incomparable = false;      // a ∥ B
};

/// Classifies from the per-profile relations of a against each b in B
/// (APreferred means a ≻ b). Throws InvalidArgument on an empty span.
ActionSetRelation classify_relations(std::span<const DerivedRelation> per_profile);

ActionSetRelation classify_action_vs_set(const CriterionSet& criteria, PerformanceView action,
                                         const ReferenceSet& set, CuttingLevel lambda);

/// Per level, per profile: the derived relation of the action against the profile.
using RelationPattern = std::vector<std::vector<DerivedRelation>>;

RelationPattern relation_pattern(const CriterionSet& criteria, PerformanceView action,
                                 const ReferenceStructure& refs, CuttingLevel lambda);

std::vector<SetRelation> classify_levels(const RelationPattern& pattern);

std::vector<SetRelation> classify_levels(const CriterionSet& criteria, PerformanceView action,
                                         const ReferenceStructure& refs, CuttingLevel lambda);

struct BasicAssumptionViolation {
  enum class Clause { WithinSet, AcrossSets };
  Clause clause;
  // `preferred` ≻ `other`, which the basic assumptions forbid.
  std::size_t preferred_level;
  std::size_t preferred_profile;
  std::size_t other_level;
  std::size_t other_profile;

  std::string describe(const ReferenceStructure& refs) const;
};

/// (i) no strict preference inside a reference set; (ii) no profile of a
/// lower-scored set strictly preferred to one of a higher-scored set.
std::vector<BasicAssumptionViolation> validate_basic_assumptions(const ReferenceStructure& refs,
                                                                 const CriterionSet& criteria,
                                                                 CuttingLevel lambda);

/// Separability flags for one ordered pair of levels, lower < upper.
struct LevelPairSeparability {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool strong_dominance = false;
  bool soft_dominance_primal = false;
  bool soft_dominance_dual = false;
  bool strong_preference = false;
  bool soft_preference_primal = false;
  bool soft_preference_dual = false;
};

struct SeparabilityReport {
  std::vector<LevelPairSeparability> pairs;
  bool strong_dominance = true;
  bool soft_dominance_primal = true;
  bool soft_dominance_dual = true;
  bool strong_preference = true;
  bool soft_preference_primal = true;
  bool soft_preference_dual = true;

  bool soft_dominance() const noexcept { return soft_dominance_primal && soft_dominance_dual; }
  bool soft_preference() const noexcept {
    return soft_preference_primal && soft_preference_dual;
  }
};

/// Exhaustive quantifier evaluation over every ordered pair of levels.
SeparabilityReport check_separability(const ReferenceStructure& refs, const CriterionSet& criteria,
                                      CuttingLevel lambda);

/// Per action: B_{x_ℓ} ≻ a and a ≻ B_{x_1}.
std::vector<bool> check_comparability(const PerformanceTable& table, const ReferenceStructure& refs,
                                      const CriterionSet& criteria, CuttingLevel lambda);

}  // namespace electre_score
