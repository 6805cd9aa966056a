#include <algorithm>
#include <optional>
#include <sstream>

#include "electre_score/properties.hpp"

namespace electre_score::properties {

std::string_view to_string(PropertyStatus status) {
  switch (status) {
    case PropertyStatus::Passed: return "passed";
    case PropertyStatus::Failed: return "failed";
    case PropertyStatus::HypothesisNotMet: return "hypothesis-not-met";
    case PropertyStatus::Vacuous: return "vacuous";
    case PropertyStatus::DocumentedDiscrepancy: return "documented-discrepancy";
    case PropertyStatus::Informational: return "informational";
  }
  return "unknown";
}

void PropertyReport::absorb(const PropertyReport& other) {
  trials += other.trials;
  checks += other.checks;
  gated += other.gated;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  observations.insert(observations.end(), other.observations.begin(), other.observations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void PropertyReport::finalize() {
  if (status == PropertyStatus::DocumentedDiscrepancy || status == PropertyStatus::Informational) {
    return;
  }
  if (!failures.empty()) {
    status = PropertyStatus::Failed;
  } else if (checks > 0) {
    status = PropertyStatus::Passed;
  } else if (trials > 0 && gated == trials) {
    status = PropertyStatus::HypothesisNotMet;
  } else {
    status = PropertyStatus::Vacuous;
  }
}

namespace {

void fail(PropertyReport& r, std::uint64_t seed, std::string expected, std::string observed) {
  r.failures.push_back({seed, {}, std::move(expected), std::move(observed)});
}

std::string level_text(const ReferenceStructure& refs, std::optional<std::size_t> k) {
  if (!k) return "none";
  std::ostringstream os;
  os << "x" << *k + 1 << "=" << refs.score(*k);
  return os.str();
}

std::string score_text(std::optional<double> s) {
  if (!s) return "none";
  std::ostringstream os;
  os << s.value();
  return os.str();
}

std::optional<double> score_of(const ReferenceStructure& refs, std::optional<std::size_t> k) {
  if (!k) return std::nullopt;
  return refs.score(*k);
}

std::vector<ActionSetRelation> level_relations(const CriterionSet& criteria, PerformanceView a,
                                               const ReferenceStructure& refs,
                                               CuttingLevel lambda) {
  std::vector<ActionSetRelation> out;
  for (const auto& level : relation_pattern(criteria, a, refs, lambda)) {
    out.push_back(classify_relations(level));
  }
  return out;
}

std::vector<SetRelation> classes_of(const std::vector<ActionSetRelation>& rels) {
  std::vector<SetRelation> out;
  for (const auto& r : rels) out.push_back(r.classification);
  return out;
}

}  // namespace

PropertyReport check_conformity(const ReferenceStructure& refs, const CriterionSet& criteria,
                                CuttingLevel lambda, std::uint64_t seed) {
  PropertyReport report;
  report.property = "conformity";
  report.trials = 1;
  const auto sep = check_separability(refs, criteria, lambda);
  const bool hypothesis = validate_basic_assumptions(refs, criteria, lambda).empty() &&
                          sep.soft_dominance() && sep.soft_preference();
  if (!hypothesis) {
    report.gated = 1;
    report.finalize();
    return report;
  }
  for (std::size_t k = 1; k + 1 < refs.level_count(); ++k) {
    for (const auto& b : refs.set(k).profiles) {
      const auto levels = classify_levels(criteria, b.view(), refs, lambda);
      const auto lower = general_lower_level(levels);
      const auto upper = general_upper_level(levels);
      ++report.checks;
      if (lower != k - 1 || upper != k + 1) {
        fail(report, seed,
             b.id + " in ]" + level_text(refs, k - 1) + ", " + level_text(refs, k + 1) + "[",
             "]" + level_text(refs, lower) + ", " + level_text(refs, upper) + "[");
      }
    }
  }
  report.finalize();
  return report;
}

namespace {

struct Bounds {
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
};

Bounds bounds_of(const CriterionSet& criteria, PerformanceView a, const ReferenceStructure& refs,
                 CuttingLevel lambda) {
  const auto levels = classify_levels(criteria, a, refs, lambda);
  return {general_lower_level(levels), general_upper_level(levels)};
}

std::optional<double> neighbour(const ReferenceStructure& refs, std::size_t k, int step) {
  if (step < 0 && k == 0) return std::nullopt;
  const std::size_t j = step < 0 ? k - 1 : k + 1;
  if (j >= refs.level_count()) return std::nullopt;
  return refs.score(j);
}

struct Expectation {
  std::optional<double> lower;
  std::optional<double> upper;
};

// Per-profile relation counts of `a` against a set, optionally skipping one profile.
struct Tally {
  std::size_t a_pref = 0;
  std::size_t b_pref = 0;
};

Tally tally(const CriterionSet& criteria, PerformanceView a, const ReferenceSet& set,
            CuttingLevel lambda, std::optional<std::size_t> skip = std::nullopt) {
  Tally t;
  for (std::size_t p = 0; p < set.profiles.size(); ++p) {
    if (skip == p) continue;
    const auto r = compare(criteria, a, set.profiles[p].view(), lambda);
    t.a_pref += r == DerivedRelation::APreferred;
    t.b_pref += r == DerivedRelation::BPreferred;
  }
  return t;
}

Expectation lemma_expectation(const EditOperation& edit, const ReferenceStructure& refs,
                              const CriterionSet& criteria, PerformanceView a, CuttingLevel lambda,
                              const Bounds& before) {
  const auto s = before.lower;
  const auto t = before.upper;
  Expectation e{score_of(refs, s), score_of(refs, t)};

  if (const auto* ins = std::get_if<InsertSet>(&edit)) {
    const auto rel = classify_relations([&] {
                       std::vector<DerivedRelation> v;
                       for (const auto& b : ins->profiles) {
                         v.push_back(compare(criteria, a, b.view(), lambda));
                       }
                       return v;
                     }())
                         .classification;
    if (s) {
      const auto next = neighbour(refs, *s, +1);
      if (refs.score(*s) < ins->score && (!next || ins->score < *next) &&
          rel == SetRelation::ActionPreferred) {
        e.lower = ins->score;
      }
    }
    if (t) {
      const auto prev = neighbour(refs, *t, -1);
      if ((!prev || *prev < ins->score) && ins->score < refs.score(*t) &&
          rel == SetRelation::SetPreferred) {
        e.upper = ins->score;
      }
    }
  } else if (const auto* del = std::get_if<DeleteSet>(&edit)) {
    if (s && *s == del->level) e.lower = neighbour(refs, *s, -1);
    if (t && *t == del->level) e.upper = neighbour(refs, *t, +1);
  } else if (const auto* ip = std::get_if<InsertProfile>(&edit)) {
    const auto r = compare(criteria, a, ip->profile.values, lambda);
    const std::size_t k = ip->level;
    if (s) {
      if (r == DerivedRelation::BPreferred && *s == k) {
        e.lower = neighbour(refs, *s, -1);
      } else if (r == DerivedRelation::APreferred && k == *s + 1 &&
                 tally(criteria, a, refs.set(k), lambda).b_pref == 0) {
        e.lower = refs.score(k);
      }
    }
    if (t) {
      if (r == DerivedRelation::APreferred && *t == k) {
        e.upper = neighbour(refs, *t, +1);
      } else if (r == DerivedRelation::BPreferred && k + 1 == *t &&
                 tally(criteria, a, refs.set(k), lambda).a_pref == 0) {
        e.upper = refs.score(k);
      }
    }
  } else if (const auto* dp = std::get_if<DeleteProfile>(&edit)) {
    const std::size_t k = dp->level;
    const auto r = compare(criteria, a, refs.set(k).profiles[dp->profile].view(), lambda);
    const auto others = tally(criteria, a, refs.set(k), lambda, dp->profile);
    if (s) {
      if (*s == k && r == DerivedRelation::APreferred && others.a_pref == 0) {
        e.lower = neighbour(refs, *s, -1);
      } else if (r == DerivedRelation::BPreferred && k == *s + 1 && others.b_pref == 0 &&
                 others.a_pref > 0) {
        e.lower = refs.score(k);
      }
    }
    if (t) {
      if (*t == k && r == DerivedRelation::BPreferred && others.b_pref == 0) {
        e.upper = neighbour(refs, *t, +1);
      } else if (r == DerivedRelation::APreferred && k + 1 == *t && others.a_pref == 0 &&
                 others.b_pref > 0) {
        e.upper = refs.score(k);
      }
    }
  }
  return e;
}

/// Whether `after` lies within one position of `before` in the merged score list.
bool within_one_level(const std::vector<double>& merged, double before, double after) {
  const auto r = std::lower_bound(merged.begin(), merged.end(), before) - merged.begin();
  const auto lo = merged[static_cast<std::size_t>(std::max<std::ptrdiff_t>(r - 1, 0))];
  const auto hi = merged[std::min(static_cast<std::size_t>(r + 1), merged.size() - 1)];
  return lo <= after && after <= hi;
}

}  // namespace

PropertyReport check_stability(const ReferenceStructure& refs, const CriterionSet& criteria,
                               CuttingLevel lambda, std::span<const EditOperation> edits,
                               const PerformanceTable& actions, std::uint64_t seed) {
  PropertyReport report;
  report.property = "stability";
  report.trials = edits.size();
  if (!check_separability(refs, criteria, lambda).soft_dominance()) {
    report.gated = edits.size();
    report.finalize();
    return report;
  }

  std::vector<Bounds> before;
  for (const auto& a : actions.actions()) before.push_back(bounds_of(criteria, a.view(), refs, lambda));

  for (const auto& edit : edits) {
    ReferenceStructure edited;
    try {
      edited = apply_edit(refs, edit);
    } catch (const Error&) {
      ++report.gated;
      continue;
    }
    if (!check_separability(edited, criteria, lambda).soft_dominance()) {
      ++report.gated;
      continue;
    }
    auto merged = refs.scores();
    for (double x : edited.scores()) merged.push_back(x);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    for (std::size_t i = 0; i < actions.action_count(); ++i) {
      const auto& a = actions.action(i);
      const auto& old = before[i];
      const auto now = bounds_of(criteria, a.view(), edited, lambda);
      const auto old_l = score_of(refs, old.lower), old_u = score_of(refs, old.upper);
      const auto new_l = score_of(edited, now.lower), new_u = score_of(edited, now.upper);
      const auto expect = lemma_expectation(edit, refs, criteria, a.view(), lambda, old);

      auto context = [&] { return a.id + " after " + describe(edit) + ": "; };
      if (old.lower) {
        ++report.checks;
        if (expect.lower != new_l) {
          fail(report, seed, context() + "lower " + score_text(expect.lower),
               "lower " + score_text(new_l) + " (was " + score_text(old_l) + ")");
        }
        if (new_l) {
          ++report.checks;
          if (!within_one_level(merged, *old_l, *new_l)) {
            fail(report, seed, context() + "lower within one level of " + score_text(old_l),
                 "lower " + score_text(new_l));
          }
        }
      }
      if (old.upper) {
        ++report.checks;
        if (expect.upper != new_u) {
          fail(report, seed, context() + "upper " + score_text(expect.upper),
               "upper " + score_text(new_u) + " (was " + score_text(old_u) + ")");
        }
        if (new_u) {
          ++report.checks;
          if (!within_one_level(merged, *old_u, *new_u)) {
            fail(report, seed, context() + "upper within one level of " + score_text(old_u),
                 "upper " + score_text(new_u));
          }
        }
      }
    }
  }
  report.finalize();
  return report;
}

namespace {

/// Action-vs-set implications that depend on the separability flags.
void check_action_implications(PropertyReport& report, const std::string& id,
                               const std::vector<ActionSetRelation>& rel,
                               const SeparabilityReport& sep, std::uint64_t seed) {
  const std::size_t n = rel.size();
  auto check = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) fail(report, seed, id + ": " + what, "violated");
  };
  auto lvl = [](std::size_t k) { return "x" + std::to_string(k + 1); };
  const bool both = sep.soft_dominance();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < n; ++h) {
      if (h < k && sep.soft_dominance_primal && rel[k].action_outranks) {
        check(!rel[h].set_preferred, "(i) a >= B_" + lvl(k) + " implies not B_" + lvl(h) + " > a");
      }
      if (h > k && sep.soft_dominance_primal && rel[k].set_preferred) {
        check(!rel[h].action_outranks,
              "(ii) B_" + lvl(k) + " > a implies not a >= B_" + lvl(h));
      }
      if (h < k && both && rel[k].action_outranks) {
        check(rel[h].action_outranks, "(iii) a >= B_" + lvl(k) + " implies a >= B_" + lvl(h));
      }
      if (h > k && both && rel[k].set_preferred) {
        check(rel[h].set_preferred, "(iv) B_" + lvl(k) + " > a implies B_" + lvl(h) + " > a");
      }
      if (h < k && both && rel[k].action_preferred) {
        check(rel[h].action_preferred, "a > B_" + lvl(k) + " implies a > B_" + lvl(h));
      }
    }
  }
}

}  // namespace

PropertyReport check_propositions(const ReferenceStructure& refs, const CriterionSet& criteria,
                                  CuttingLevel lambda, const PerformanceTable& actions,
                                  std::uint64_t seed) {
  PropertyReport report;
  report.property = "propositions";
  report.trials = 1;
  const auto sep = check_separability(refs, criteria, lambda);
  const bool basic = validate_basic_assumptions(refs, criteria, lambda).empty();
  if (!sep.soft_dominance_primal && !sep.soft_dominance_dual) {
    report.gated = 1;
    report.finalize();
    return report;
  }

  // Profile statements (v) and (vi) also rely on the basic assumptions.
  for (std::size_t k = 0; k < refs.level_count(); ++k) {
    for (const auto& b : refs.set(k).profiles) {
      const auto rel = level_relations(criteria, b.view(), refs, lambda);
      for (std::size_t h = 0; h < refs.level_count(); ++h) {
        if (h <= k && basic && sep.soft_dominance_dual) {
          ++report.checks;
          if (!rel[h].action_outranks) {
            fail(report, seed, "(v) " + b.id + " >= B_x" + std::to_string(h + 1), "violated");
          }
        }
        if (h > k && basic && sep.soft_preference_primal) {
          ++report.checks;
          if (!rel[h].set_preferred) {
            fail(report, seed, "(vi) B_x" + std::to_string(h + 1) + " > " + b.id, "violated");
          }
        }
      }
    }
  }

  for (const auto& a : actions.actions()) {
    const auto rel = level_relations(criteria, a.view(), refs, lambda);
    check_action_implications(report, a.id, rel, sep, seed);
    if (!sep.soft_dominance()) continue;

    const auto cls = classes_of(rel);
    const auto lower = general_lower_level(cls);
    const auto upper = general_upper_level(cls);
    if (!lower || !upper) {
      report.observations.push_back({seed, {}, a.id + " comparable",
                                     std::string(!lower ? "NoLowerBound" : "NoUpperBound")});
    }
    auto check = [&](bool ok, const std::string& expected, const std::string& observed) {
      ++report.checks;
      if (!ok) fail(report, seed, a.id + ": " + expected, observed);
    };
    check(fast_lower_level(cls) == lower, "fast lower bound equals general " + level_text(refs, lower),
          level_text(refs, fast_lower_level(cls)));
    check(fast_upper_level(cls) == upper, "fast upper bound equals general " + level_text(refs, upper),
          level_text(refs, fast_upper_level(cls)));
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const std::string at = " at x" + std::to_string(k + 1);
      const std::string got(to_string(cls[k]));
      if (lower && k <= *lower) {
        check(cls[k] == SetRelation::ActionPreferred, "a > B" + at, got);
      }
      if (upper && k >= *upper) {
        check(cls[k] == SetRelation::SetPreferred, "B > a" + at, got);
      }
      if (lower && upper && k > *lower && k < *upper) {
        check(cls[k] != SetRelation::ActionPreferred && cls[k] != SetRelation::SetPreferred,
              "no preference inside the range" + at, got);
      }
      if (lower && upper &&
          (cls[k] == SetRelation::Indifferent || cls[k] == SetRelation::Incomparable)) {
        check(*lower < k && k < *upper, "neutral level inside the range" + at,
              "range ]" + level_text(refs, lower) + ", " + level_text(refs, upper) + "[");
      }
    }
    if (lower && upper) {
      check(*lower < *upper, "lower bound below upper bound",
            level_text(refs, lower) + " vs " + level_text(refs, upper));
    }
  }
  report.finalize();
  return report;
}

}  // namespace electre_score::properties
