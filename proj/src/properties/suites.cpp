#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "electre_score/properties.hpp"
#include "random.hpp"

namespace electre_score::properties {

namespace {

using detail::coin;
using detail::half_step;
using detail::uniform_int;

using Trial = std::function<PropertyReport(const Instance&, std::uint64_t)>;

void fail(PropertyReport& r, std::uint64_t seed, std::string expected, std::string observed) {
  r.failures.push_back({seed, {}, std::move(expected), std::move(observed)});
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// A copy of `values` made strictly worse on a nonempty random subset of criteria.
std::vector<double> worsen(std::mt19937_64& rng, const CriterionSet& criteria,
                           std::vector<double> values) {
  const std::size_t forced = uniform_int(rng, 0, criteria.size() - 1);
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (j != forced && coin(rng)) continue;
    const double delta = half_step(rng, 0.5, 4.0);
    values[j] += criteria[j].direction == Direction::Maximize ? -delta : delta;
  }
  return values;
}

std::vector<double> jitter(std::mt19937_64& rng, const CriterionSet& criteria,
                           std::vector<double> values) {
  for (std::size_t j = 0; j < criteria.size(); ++j) values[j] += half_step(rng, -3.0, 3.0);
  return values;
}

std::vector<double> random_point(std::mt19937_64& rng, const Instance& inst) {
  // Kept clear of zero so perturbed copies stay positive: variable thresholds
  // with a zero-width band invert on negative anchors.
  const double top = kBandSpacing * static_cast<double>(inst.refs.level_count());
  std::vector<double> v;
  for (const auto& c : inst.criteria) v.push_back(raw_from_goodness(c, half_step(rng, 15.0, top + 15.0)));
  return v;
}

/// Points mixing dominance chains and near neighbours so implications fire.
std::vector<std::vector<double>> probe_points(std::mt19937_64& rng, const Instance& inst) {
  std::vector<std::vector<double>> pts;
  pts.push_back(random_point(rng, inst));
  pts.push_back(worsen(rng, inst.criteria, pts[0]));
  pts.push_back(jitter(rng, inst.criteria, pts[1]));
  pts.push_back(worsen(rng, inst.criteria, pts[2]));
  pts.push_back(jitter(rng, inst.criteria, pts[0]));
  return pts;
}

const std::vector<double> kLambdas{0.55, 0.7, 0.85, 1.0};

PropertyReport remark1_trial(const Instance& inst, std::uint64_t seed) {
  PropertyReport r;
  r.trials = 1;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto pts = probe_points(rng, inst);
  const auto& cs = inst.criteria;
  std::vector<double> lambdas = kLambdas;
  lambdas.push_back(inst.lambda.value());

  for (double lv : lambdas) {
    const CuttingLevel lambda(lv);
    auto outranks = [&](std::size_t i, std::size_t j) {
      return crisp_outranks(credibility(cs, pts[i], pts[j]), lambda);
    };
    auto prefers = [&](std::size_t i, std::size_t j) { return outranks(i, j) && !outranks(j, i); };
    auto dom = [&](std::size_t i, std::size_t j) { return dominates(cs, pts[i], pts[j]); };
    auto check = [&](bool ok, const std::string& rule, std::size_t a, std::size_t b,
                     std::size_t c) {
      ++r.checks;
      if (!ok) {
        fail(r, seed, rule + " at lambda " + num(lv),
             "violated for points " + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c));
      }
    };
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (dom(a, b)) check(outranks(a, b), "1.1 a D b => a >= b", a, b, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (outranks(a, b) && dom(b, c)) check(outranks(a, c), "1.2 a >= b, b D c => a >= c", a, b, c);
          if (dom(a, b) && outranks(b, c)) check(outranks(a, c), "1.3 a D b, b >= c => a >= c", a, b, c);
          if (prefers(a, b) && dom(b, c)) check(prefers(a, c), "1.4 a > b, b D c => a > c", a, b, c);
          if (dom(a, b) && prefers(b, c)) check(prefers(a, c), "1.5 a D b, b > c => a > c", a, b, c);
        }
      }
    }
  }
  return r;
}

PropertyReport credibility_trial(const Instance& inst, std::uint64_t seed) {
  PropertyReport r;
  r.trials = 1;
  std::mt19937_64 rng(seed ^ 0x51ed270b27a1f3c5ULL);
  const auto& cs = inst.criteria;
  auto pts = probe_points(rng, inst);
  for (const auto& a : inst.table.actions()) pts.push_back(a.values);
  auto check = [&](bool ok, const std::string& what, const std::string& observed) {
    ++r.checks;
    if (!ok) fail(r, seed, what, observed);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    check(credibility(cs, pts[i], pts[i]) == 1.0, "sigma(e,e) = 1",
          num(credibility(cs, pts[i], pts[i])));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double c = concordance(cs, pts[i], pts[j]);
      const double s = credibility(cs, pts[i], pts[j]);
      check(0.0 <= c && c <= 1.0, "0 <= c <= 1", num(c));
      check(0.0 <= s && s <= c, "0 <= sigma <= c", "sigma " + num(s) + ", c " + num(c));
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const double d = discordance(cs[k], pts[i][k], pts[j][k], cs.tolerance());
        check(0.0 <= d && d <= 1.0, "0 <= d_j <= 1", num(d));
      }
      if (!cs.has_veto()) check(s == c, "no veto: sigma = c", "sigma " + num(s) + ", c " + num(c));
      if (dominates(cs, pts[i], pts[j])) check(s == 1.0, "a D b => sigma(a,b) = 1", num(s));
      const auto rel = compare(cs, pts[i], pts[j], inst.lambda);
      const bool sab = crisp_outranks(s, inst.lambda);
      const bool sba = crisp_outranks(credibility(cs, pts[j], pts[i]), inst.lambda);
      check(rel == derived_relation(sab, sba), "derived relation matches the outranking pair",
            std::string(to_string(rel)));
    }
  }
  const auto matrix = CredibilityMatrix::build(cs, inst.table, inst.refs);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    check(matrix.sigma(i, i) == 1.0, "matrix diagonal is 1", num(matrix.sigma(i, i)));
  }
  return r;
}

PropertyReport remark2_trial(const Instance& inst, std::uint64_t seed) {
  PropertyReport r;
  r.trials = 1;
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
  const auto& cs = inst.criteria;
  auto check = [&](bool ok, const std::string& what, const std::string& where) {
    ++r.checks;
    if (!ok) fail(r, seed, what, "violated for " + where);
  };
  for (const auto& act : inst.table.actions()) {
    const auto worse = worsen(rng, cs, act.values);
    for (std::size_t k = 0; k < inst.refs.level_count(); ++k) {
      const auto& set = inst.refs.set(k);
      const auto ra = classify_action_vs_set(cs, act.view(), set, inst.lambda);
      const auto rb = classify_action_vs_set(cs, worse, set, inst.lambda);
      const std::string where = act.id + " at x" + std::to_string(k + 1);
      if (ra.action_preferred) {
        check(ra.action_outranks, "(i) a > B => a >= B", where);
        check(!ra.set_outranks && !ra.set_preferred, "(ii) a > B => not B >= a", where);
      }
      if (ra.set_preferred) {
        check(!ra.action_outranks && !ra.action_preferred, "(iii) B > a => not a >= B", where);
        check(ra.set_outranks, "(iv) B > a => B >= a", where);
        check(rb.set_preferred, "(v) B > a, a D b => B > b", where);
      }
      if (rb.action_outranks) check(ra.action_outranks, "(vi) a D b, b >= B => a >= B", where);
      if (rb.action_preferred) check(ra.action_preferred, "(vii) a D b, b > B => a > B", where);
      const int flags = ra.action_preferred + ra.set_preferred + ra.indifferent +
                        (ra.classification == SetRelation::Incomparable);
      check(flags == 1, "exactly one classification", where);
    }
  }
  return r;
}

PropertyReport propositions_trial(const Instance& inst, std::uint64_t seed) {
  return check_propositions(inst.refs, inst.criteria, inst.lambda, inst.table, seed);
}

PropertyReport conformity_trial(const Instance& inst, std::uint64_t seed) {
  return check_conformity(inst.refs, inst.criteria, inst.lambda, seed);
}

PropertyReport stability_trial(const Instance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
  const auto edits = generate_edits(inst, rng, 6);
  return check_stability(inst.refs, inst.criteria, inst.lambda, edits, inst.table, seed);
}

struct RangeKey {
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
  bool operator==(const RangeKey&) const = default;
};

std::map<std::string, RangeKey> ranges_by_id(const PerformanceTable& table, const Instance& inst) {
  ScoringOptions options;
  options.force = true;
  options.method = BoundMethod::General;
  std::map<std::string, RangeKey> out;
  for (const auto& r : score_ranges(table, inst.refs, inst.criteria, inst.lambda, options).ranges) {
    out[r.action] = {r.lower ? std::optional(r.lower->level) : std::nullopt,
                     r.upper ? std::optional(r.upper->level) : std::nullopt};
  }
  return out;
}

std::string key_text(const RangeKey& k) {
  auto one = [](std::optional<std::size_t> v) { return v ? "x" + std::to_string(*v + 1) : "none"; };
  return "]" + one(k.lower) + ", " + one(k.upper) + "[";
}

PropertyReport structural_trial(const Instance& inst, std::uint64_t seed) {
  PropertyReport r;
  r.trials = 1;
  std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);
  const auto full = ranges_by_id(inst.table, inst);
  auto check = [&](bool ok, const std::string& what, const std::string& observed) {
    ++r.checks;
    if (!ok) fail(r, seed, what, observed);
  };

  // Uniqueness and independence: any subset containing a gives a the same range.
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<Alternative> subset;
    for (const auto& a : inst.table.actions()) {
      if (coin(rng)) subset.push_back(a);
    }
    if (subset.empty()) continue;
    const auto part = ranges_by_id(PerformanceTable(inst.table.criterion_count(), subset), inst);
    for (const auto& [id, key] : part) {
      check(key == full.at(id), id + " keeps " + key_text(full.at(id)) + " in a subset",
            key_text(key));
    }
  }

  // Homogeneity: a duplicate gets the same range as its original.
  std::vector<Alternative> doubled = inst.table.actions();
  for (const auto& a : inst.table.actions()) doubled.push_back({a.id + "'", a.values});
  const auto dup = ranges_by_id(PerformanceTable(inst.table.criterion_count(), doubled), inst);
  for (const auto& a : inst.table.actions()) {
    check(dup.at(a.id + "'") == dup.at(a.id), a.id + "' matches " + key_text(dup.at(a.id)),
          key_text(dup.at(a.id + "'")));
  }

  // Monotonicity: a dominated variant never gets a higher bound.
  std::vector<Alternative> worse;
  for (const auto& a : inst.table.actions()) {
    worse.push_back({a.id, worsen(rng, inst.criteria, a.values)});
  }
  const auto low = ranges_by_id(PerformanceTable(inst.table.criterion_count(), worse), inst);
  for (const auto& [id, key] : low) {
    const auto& orig = full.at(id);
    if (orig.lower && key.lower) {
      check(*orig.lower >= *key.lower, id + " lower " + key_text(orig) + " >= dominated variant",
            key_text(key));
    }
    if (orig.upper && key.upper) {
      check(*orig.upper >= *key.upper, id + " upper " + key_text(orig) + " >= dominated variant",
            key_text(key));
    }
  }
  return r;
}

/// The worked example lists blank cards and reference scores that disagree;
/// the stated formula is asserted and the disagreement is reported.
PropertyReport deck_of_cards_report() {
  PropertyReport r;
  r.property = "deck_of_cards_example";
  r.trials = 1;
  const DeckOfCards deck{{1, 2, 0, 1, 0, 2}, 0.0, 100.0};
  const auto scores = deck_of_cards_scores(deck);
  const std::vector<double> formula{0.0, 50.0 / 3.0, 125.0 / 3.0, 50.0, 200.0 / 3.0, 75.0, 100.0};
  ++r.checks;
  if (std::abs(deck_unit(deck) - 100.0 / 12.0) > 1e-12) {
    fail(r, 0, "unit 100/12", num(deck_unit(deck)));
  }
  for (std::size_t k = 0; k < formula.size(); ++k) {
    ++r.checks;
    if (std::abs(scores[k] - formula[k]) > 1e-9) {
      fail(r, 0, "x" + std::to_string(k + 1) + " = " + num(formula[k]), num(scores[k]));
    }
  }
  const std::vector<double> listed{0.0, 25.0, 100.0 / 3.0, 50.0, 175.0 / 3.0, 250.0 / 3.0, 100.0};
  std::ostringstream units;
  for (std::size_t k = 1; k < listed.size(); ++k) {
    units << (k > 1 ? "," : "") << std::lround((listed[k] - listed[k - 1]) / deck_unit(deck));
  }
  r.notes.push_back("listed example scores imply unit counts (" + units.str() +
                    "), the blank cards imply (2,3,1,2,1,3)");
  r.status = r.failures.empty() ? PropertyStatus::DocumentedDiscrepancy : PropertyStatus::Failed;
  return r;
}

struct Suite {
  std::string name;
  Trial trial;
  bool informational = false;
  std::function<InstanceConfig(InstanceConfig, std::uint64_t)> configure;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    auto same = [](InstanceConfig c, std::uint64_t) { return c; };
    std::vector<Suite> s;
    s.push_back({"remark1_implications", remark1_trial, false, same});
    s.push_back({"remark1_variable_thresholds", remark1_trial, true,
                 [](InstanceConfig c, std::uint64_t) {
                   c.thresholds = ThresholdKind::Variable;
                   return c;
                 }});
    s.push_back({"credibility_invariants", credibility_trial, false,
                 [](InstanceConfig c, std::uint64_t seed) {
                   // Every other trial carries vetoes so discordance is exercised.
                   c.veto = c.veto || seed % 2 == 1;
                   return c;
                 }});
    s.push_back({"remark2_implications", remark2_trial, false, same});
    s.push_back({"propositions", propositions_trial, false, same});
    s.push_back({"conformity", conformity_trial, false, same});
    s.push_back({"stability", stability_trial, false, same});
    s.push_back({"structural_requirements", structural_trial, false, same});
    return s;
  }();
  return all;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    n.emplace_back("deck_of_cards_example");
    return n;
  }();
  return names;
}

PropertyReport run_property(std::string_view name, const SuiteOptions& options) {
  if (name == "deck_of_cards_example") return deck_of_cards_report();
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const Suite& s) { return s.name == name; });
  if (it == suites().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown property: " + std::string(name));
  }

  PropertyReport report;
  report.property = it->name;
  bool shrunk = false;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = options.base_seed + t;
    const auto inst = generate_instance(seed, it->configure(options.instance, seed));
    auto result = it->trial(inst, seed);
    if (!result.failures.empty()) {
      const auto tag = digest(inst);
      for (auto& f : result.failures) f.digest = tag;
      if (!shrunk && !it->informational) {
        shrunk = true;
        const auto small = shrink(inst, [&](const Instance& candidate) {
          return !it->trial(candidate, seed).failures.empty();
        });
        std::ostringstream os;
        os << "seed " << seed << " shrinks to " << small.criteria.size() << " criteria, "
           << small.refs.level_count() << " levels, " << small.refs.profile_count()
           << " profiles, " << small.table.action_count() << " actions (digest "
           << digest(small) << ")";
        result.notes.push_back(os.str());
      }
    }
    report.absorb(result);
  }
  if (it->informational) {
    for (auto& f : report.failures) report.observations.push_back(std::move(f));
    report.failures.clear();
    report.notes.push_back(std::to_string(report.observations.size()) +
                           " implication violations observed under variable thresholds");
    report.status = PropertyStatus::Informational;
  }
  report.finalize();
  return report;
}

}  // namespace electre_score::properties
