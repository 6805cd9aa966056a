#include "electre_score/refsets.hpp"

#include <algorithm>
#include <sstream>

namespace electre_score {

std::string_view to_string(SetRelation r) {
  switch (r) {
    case SetRelation::ActionPreferred: return "ActionPreferred";
    case SetRelation::SetPreferred: return "SetPreferred";
    case SetRelation::Indifferent: return "Indifferent";
    case SetRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

ActionSetRelation classify_relations(std::span<const DerivedRelation> per_profile) {
  if (per_profile.empty()) throw Error(ErrorCode::InvalidArgument, "empty reference set");

  std::size_t a_pref = 0, b_pref = 0, indiff = 0;
  for (auto r : per_profile) {
    switch (r) {
      case DerivedRelation::APreferred: ++a_pref; break;
      case DerivedRelation::BPreferred: ++b_pref; break;
      case DerivedRelation::Indifferent: ++indiff; break;
      case DerivedRelation::Incomparable: break;
    }
  }

  ActionSetRelation out;
  out.action_outranks = b_pref == 0 && (a_pref + indiff) > 0;
  out.set_outranks = a_pref == 0 && (b_pref + indiff) > 0;
  out.action_preferred = b_pref == 0 && a_pref > 0;
  out.set_preferred = a_pref == 0 && b_pref > 0;
  out.indifferent = a_pref == 0 && b_pref == 0 && indiff > 0;
  out.incomparable = (a_pref == 0 && b_pref == 0 && indiff == 0) || (a_pref > 0 && b_pref > 0);

  if (a_pref > 0 && b_pref > 0) {
    out.classification = SetRelation::Incomparable;
  } else if (a_pref > 0) {
    out.classification = SetRelation::ActionPreferred;
  } else if (b_pref > 0) {
    out.classification = SetRelation::SetPreferred;
  } else if (indiff > 0) {
    out.classification = SetRelation::Indifferent;
  } else {
    out.classification = SetRelation::Incomparable;
  }
  return out;
}

namespace {

std::vector<DerivedRelation> relations_to_set(const CriterionSet& criteria, PerformanceView action,
                                              const ReferenceSet& set, CuttingLevel lambda) {
  std::vector<DerivedRelation> out;
  out.reserve(set.profiles.size());
  for (const auto& b : set.profiles) out.push_back(compare(criteria, action, b.view(), lambda));
  return out;
}

}  // namespace

ActionSetRelation classify_action_vs_set(const CriterionSet& criteria, PerformanceView action,
                                         const ReferenceSet& set, CuttingLevel lambda) {
  return classify_relations(relations_to_set(criteria, action, set, lambda));
}

RelationPattern relation_pattern(const CriterionSet& criteria, PerformanceView action,
                                 const ReferenceStructure& refs, CuttingLevel lambda) {
  RelationPattern out;
  out.reserve(refs.level_count());
  for (const auto& s : refs.sets()) out.push_back(relations_to_set(criteria, action, s, lambda));
  return out;
}

std::vector<SetRelation> classify_levels(const RelationPattern& pattern) {
  std::vector<SetRelation> out;
  out.reserve(pattern.size());
  for (const auto& level : pattern) out.push_back(classify_relations(level).classification);
  return out;
}

std::vector<SetRelation> classify_levels(const CriterionSet& criteria, PerformanceView action,
                                         const ReferenceStructure& refs, CuttingLevel lambda) {
  return classify_levels(relation_pattern(criteria, action, refs, lambda));
}

std::string BasicAssumptionViolation::describe(const ReferenceStructure& refs) const {
  const auto& winner = refs.set(preferred_level).profiles[preferred_profile];
  const auto& loser = refs.set(other_level).profiles[other_profile];
  std::ostringstream os;
  if (clause == Clause::WithinSet) {
    os << "condition 1(i): " << winner.id << " is preferred to " << loser.id
       << " inside level " << preferred_level + 1;
  } else {
    os << "condition 1(ii): " << winner.id << " (level " << preferred_level + 1
       << ") is preferred to " << loser.id << " (level " << other_level + 1 << ")";
  }
  return os.str();
}

namespace {

struct ProfileRef {
  std::size_t level;
  std::size_t index;
  const Alternative* profile;
};

std::vector<ProfileRef> flatten(const ReferenceStructure& refs) {
  std::vector<ProfileRef> out;
  for (std::size_t k = 0; k < refs.level_count(); ++k) {
    const auto& ps = refs.set(k).profiles;
    for (std::size_t p = 0; p < ps.size(); ++p) out.push_back({k, p, &ps[p]});
  }
  return out;
}

/// Profile-vs-profile σ and dominance, computed once per structure.
struct ProfileRelations {
  std::vector<ProfileRef> profiles;
  std::vector<double> sigma;
  std::vector<char> dominance;

  ProfileRelations(const ReferenceStructure& refs, const CriterionSet& criteria)
      : profiles(flatten(refs)) {
    const std::size_t n = profiles.size();
    sigma.assign(n * n, 1.0);
    dominance.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) continue;
        const auto a = profiles[i].profile->view();
        const auto b = profiles[k].profile->view();
        sigma[i * n + k] = credibility(criteria, a, b);
        dominance[i * n + k] = electre_score::dominates(criteria, a, b) ? 1 : 0;
      }
    }
  }

  std::size_t size() const { return profiles.size(); }
  bool preferred(std::size_t i, std::size_t k, CuttingLevel lambda) const {
    const std::size_t n = size();
    return compare(sigma[i * n + k], sigma[k * n + i], lambda) == DerivedRelation::APreferred;
  }
  bool dominates(std::size_t i, std::size_t k) const { return dominance[i * size() + k] != 0; }
};

}  // namespace

std::vector<BasicAssumptionViolation> validate_basic_assumptions(const ReferenceStructure& refs,
                                                                 const CriterionSet& criteria,
                                                                 CuttingLevel lambda) {
  const ProfileRelations rel(refs, criteria);
  std::vector<BasicAssumptionViolation> out;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (i == k || !rel.preferred(i, k, lambda)) continue;
      const auto& w = rel.profiles[i];
      const auto& l = rel.profiles[k];
      // Scores are strictly increasing with the level index.
      if (w.level == l.level) {
        out.push_back({BasicAssumptionViolation::Clause::WithinSet, w.level, w.index, l.level,
                       l.index});
      } else if (w.level < l.level) {
        out.push_back({BasicAssumptionViolation::Clause::AcrossSets, w.level, w.index, l.level,
                       l.index});
      }
    }
  }
  return out;
}

SeparabilityReport check_separability(const ReferenceStructure& refs, const CriterionSet& criteria,
                                      CuttingLevel lambda) {
  const ProfileRelations rel(refs, criteria);
  std::vector<std::vector<std::size_t>> members(refs.level_count());
  for (std::size_t i = 0; i < rel.size(); ++i) members[rel.profiles[i].level].push_back(i);

  SeparabilityReport report;
  for (std::size_t lo = 0; lo < refs.level_count(); ++lo) {
    for (std::size_t hi = lo + 1; hi < refs.level_count(); ++hi) {
      const auto& low = members[lo];
      const auto& high = members[hi];
      auto all_pairs = [&](auto pred) {
        return std::all_of(high.begin(), high.end(), [&](std::size_t h) {
          return std::all_of(low.begin(), low.end(), [&](std::size_t l) { return pred(h, l); });
        });
      };
      // primal: every lower profile is beaten by some upper one
      auto primal = [&](auto pred) {
        return std::all_of(low.begin(), low.end(), [&](std::size_t l) {
          return std::any_of(high.begin(), high.end(), [&](std::size_t h) { return pred(h, l); });
        });
      };
      // dual: every upper profile beats some lower one
      auto dual = [&](auto pred) {
        return std::all_of(high.begin(), high.end(), [&](std::size_t h) {
          return std::any_of(low.begin(), low.end(), [&](std::size_t l) { return pred(h, l); });
        });
      };
      auto dom = [&](std::size_t h, std::size_t l) { return rel.dominates(h, l); };
      auto pref = [&](std::size_t h, std::size_t l) { return rel.preferred(h, l, lambda); };

      LevelPairSeparability p;
      p.lower = lo;
      p.upper = hi;
      p.strong_dominance = all_pairs(dom);
      p.soft_dominance_primal = primal(dom);
      p.soft_dominance_dual = dual(dom);
      p.strong_preference = all_pairs(pref);
      p.soft_preference_primal = primal(pref);
      p.soft_preference_dual = dual(pref);

      report.strong_dominance = report.strong_dominance && p.strong_dominance;
      report.soft_dominance_primal = report.soft_dominance_primal && p.soft_dominance_primal;
      report.soft_dominance_dual = report.soft_dominance_dual && p.soft_dominance_dual;
      report.strong_preference = report.strong_preference && p.strong_preference;
      report.soft_preference_primal = report.soft_preference_primal && p.soft_preference_primal;
      report.soft_preference_dual = report.soft_preference_dual && p.soft_preference_dual;
      report.pairs.push_back(p);
    }
  }
  return report;
}

std::vector<bool> check_comparability(const PerformanceTable& table, const ReferenceStructure& refs,
                                      const CriterionSet& criteria, CuttingLevel lambda) {
  std::vector<bool> out;
  out.reserve(table.action_count());
  if (refs.level_count() == 0) {
    out.assign(table.action_count(), false);
    return out;
  }
  const auto& bottom = refs.set(0);
  const auto& top = refs.set(refs.level_count() - 1);
  for (const auto& a : table.actions()) {
    const auto up = classify_action_vs_set(criteria, a.view(), top, lambda);
    const auto down = classify_action_vs_set(criteria, a.view(), bottom, lambda);
    out.push_back(up.classification == SetRelation::SetPreferred &&
                  down.classification == SetRelation::ActionPreferred);
  }
  return out;
}

}  // namespace electre_score
