#include <cstring>
#include <iomanip>
#include <sstream>

#include "electre_score/properties.hpp"
#include "random.hpp"

namespace electre_score::properties {

using detail::coin;
using detail::half_step;
using detail::uniform;
using detail::uniform_int;

double raw_from_goodness(const Criterion& criterion, double goodness) {
  return criterion.direction == Direction::Maximize ? goodness : kMinimizeOffset - goodness;
}

namespace {

std::vector<Criterion> generate_criteria(std::mt19937_64& rng, std::size_t n,
                                         const InstanceConfig& config) {
  std::vector<Criterion> out;
  bool positive = false;
  for (std::size_t j = 0; j < n; ++j) {
    Criterion c;
    c.name = "g" + std::to_string(j + 1);
    c.direction = coin(rng) ? Direction::Maximize : Direction::Minimize;
    c.weight = coin(rng, 0.1) ? 0.0 : static_cast<double>(uniform_int(rng, 1, 5));
    positive = positive || c.weight > 0.0;

    const double q = half_step(rng, 0.0, 1.5);
    const double p = q + half_step(rng, 0.0, 1.5);
    if (config.thresholds == ThresholdKind::Constant) {
      c.indifference = ThresholdSpec::constant(q);
      c.preference = ThresholdSpec::constant(p);
    } else {
      // Anchors reach kMinimizeOffset on minimized criteria; keep slopes small there.
      const double scale = c.direction == Direction::Maximize ? 0.02 : 0.002;
      const double qs = uniform(rng, 0.0, scale);
      const double ps = qs + uniform(rng, 0.0, scale);
      const auto mode = coin(rng) ? ThresholdMode::Direct : ThresholdMode::Inverse;
      c.indifference = {q, qs, mode};
      c.preference = {p, ps, mode};
    }
    if (config.veto) {
      const double gap = half_step(rng, 1.0, 6.0);
      c.veto = ThresholdSpec{c.preference.intercept + gap, c.preference.slope,
                             c.preference.mode};
    }
    out.push_back(std::move(c));
  }
  if (!positive) out.front().weight = 1.0;
  return out;
}

std::size_t draw_size(std::mt19937_64& rng, std::size_t minimum, std::size_t limit, bool vary) {
  limit = std::max(limit, minimum);
  return vary ? uniform_int(rng, minimum, limit) : limit;
}

std::vector<double> point(std::mt19937_64& rng, const std::vector<Criterion>& criteria, double lo,
                          double hi) {
  std::vector<double> v;
  v.reserve(criteria.size());
  for (const auto& c : criteria) v.push_back(raw_from_goodness(c, half_step(rng, lo, hi)));
  return v;
}

/// Removes the dominated side of every within-level strict preference.
ReferenceStructure prune_within_level(ReferenceStructure refs, const CriterionSet& criteria,
                                      CuttingLevel lambda) {
  for (;;) {
    const auto violations = validate_basic_assumptions(refs, criteria, lambda);
    auto it = std::find_if(violations.begin(), violations.end(), [](const auto& v) {
      return v.clause == BasicAssumptionViolation::Clause::WithinSet;
    });
    if (it == violations.end()) return refs;
    auto sets = refs.sets();
    auto& profiles = sets[it->other_level].profiles;
    profiles.erase(profiles.begin() + static_cast<std::ptrdiff_t>(it->other_profile));
    refs = ReferenceStructure(refs.criterion_count(), std::move(sets));
  }
}

}  // namespace

Instance generate_instance(std::uint64_t seed, const InstanceConfig& config) {
  std::mt19937_64 rng(seed);
  const std::size_t n = draw_size(rng, 1, config.criteria, config.vary_sizes);
  const std::size_t levels = draw_size(rng, 2, config.levels, config.vary_sizes);
  const std::size_t actions = draw_size(rng, 1, config.actions, config.vary_sizes);

  auto criteria_list = generate_criteria(rng, n, config);
  CriterionSet criteria(criteria_list);
  const CuttingLevel lambda(static_cast<double>(11 + uniform_int(rng, 0, 9)) / 20.0);

  DeckOfCards deck;
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    deck.blank_cards.push_back(static_cast<int>(uniform_int(rng, 0, 3)));
  }
  const auto scores = deck_of_cards_scores(deck);

  const double top = kBandSpacing * static_cast<double>(levels - 1);
  std::vector<ReferenceSet> sets;
  for (std::size_t k = 0; k < levels; ++k) {
    ReferenceSet s;
    s.score = scores[k];
    const std::size_t count = draw_size(rng, 1, config.profiles_per_level, config.vary_sizes);
    for (std::size_t p = 0; p < count; ++p) {
      const double lo = config.strong_dominance ? kBandSpacing * static_cast<double>(k) : 0.0;
      const double hi = config.strong_dominance ? lo + kBandWidth : top + kBandWidth;
      s.profiles.push_back({"b" + std::to_string(k + 1) + "_" + std::to_string(p + 1),
                            point(rng, criteria_list, lo, hi)});
    }
    sets.push_back(std::move(s));
  }
  ReferenceStructure refs(n, std::move(sets));
  if (config.strong_dominance) refs = prune_within_level(std::move(refs), criteria, lambda);

  // Strictly between the bottom band and the top band, so that most actions
  // are comparable; free mode draws from the full range.
  const double act_lo = config.strong_dominance ? kBandWidth + 4.0 : 0.0;
  const double act_hi = config.strong_dominance ? top - 4.0 : top + kBandWidth;
  std::vector<Alternative> rows;
  for (std::size_t i = 0; i < actions; ++i) {
    rows.push_back({"a" + std::to_string(i + 1), point(rng, criteria_list, act_lo, act_hi)});
  }

  return Instance{seed, std::move(criteria), PerformanceTable(n, std::move(rows)),
                  std::move(refs), lambda};
}

std::string digest(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix_bytes = [&h](const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  auto mix = [&](double v) { mix_bytes(&v, sizeof v); };
  for (const auto& c : instance.criteria) {
    mix(c.direction == Direction::Maximize ? 1.0 : -1.0);
    mix(c.weight);
    for (const auto* t : {&c.indifference, &c.preference}) {
      mix(t->intercept);
      mix(t->slope);
      mix(static_cast<double>(t->mode));
    }
    if (c.veto) {
      mix(c.veto->intercept);
      mix(c.veto->slope);
    }
  }
  mix(instance.lambda.value());
  for (const auto& s : instance.refs.sets()) {
    mix(s.score);
    for (const auto& p : s.profiles) {
      for (double v : p.values) mix(v);
    }
  }
  for (const auto& a : instance.table.actions()) {
    for (double v : a.values) mix(v);
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

std::optional<Instance> drop_criterion(const Instance& in, std::size_t j) {
  if (in.criteria.size() < 2) return std::nullopt;
  auto list = in.criteria.criteria();
  list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
  if (std::none_of(list.begin(), list.end(), [](const Criterion& c) { return c.weight > 0.0; })) {
    return std::nullopt;
  }
  auto strip = [j](Alternative a) {
    a.values.erase(a.values.begin() + static_cast<std::ptrdiff_t>(j));
    return a;
  };
  std::vector<Alternative> rows;
  for (const auto& a : in.table.actions()) rows.push_back(strip(a));
  std::vector<ReferenceSet> sets;
  for (const auto& s : in.refs.sets()) {
    ReferenceSet t{s.score, {}};
    for (const auto& p : s.profiles) t.profiles.push_back(strip(p));
    sets.push_back(std::move(t));
  }
  const std::size_t n = list.size();
  return Instance{in.seed, CriterionSet(std::move(list), in.criteria.tolerance()),
                  PerformanceTable(n, std::move(rows)), ReferenceStructure(n, std::move(sets)),
                  in.lambda};
}

std::optional<Instance> drop_profile(const Instance& in, std::size_t level, std::size_t p) {
  auto sets = in.refs.sets();
  if (sets[level].profiles.size() > 1) {
    sets[level].profiles.erase(sets[level].profiles.begin() + static_cast<std::ptrdiff_t>(p));
  } else if (sets.size() > 2) {
    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(level));
  } else {
    return std::nullopt;
  }
  Instance out = in;
  out.refs = ReferenceStructure(in.refs.criterion_count(), std::move(sets));
  return out;
}

std::optional<Instance> drop_action(const Instance& in, std::size_t i) {
  auto rows = in.table.actions();
  if (rows.size() < 2) return std::nullopt;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
  Instance out = in;
  out.table = PerformanceTable(in.table.criterion_count(), std::move(rows));
  return out;
}

}  // namespace

Instance shrink(const Instance& failing, const std::function<bool(const Instance&)>& fails) {
  Instance best = failing;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = best.criteria.size(); j-- > 0;) {
      if (auto c = drop_criterion(best, j); c && fails(*c)) {
        best = std::move(*c);
        progress = true;
      }
    }
    for (std::size_t k = best.refs.level_count(); k-- > 0;) {
      if (k >= best.refs.level_count()) continue;
      for (std::size_t p = best.refs.set(k).profiles.size(); p-- > 0;) {
        if (k >= best.refs.level_count() || p >= best.refs.set(k).profiles.size()) continue;
        if (auto c = drop_profile(best, k, p); c && fails(*c)) {
          best = std::move(*c);
          progress = true;
        }
      }
    }
    for (std::size_t i = best.table.action_count(); i-- > 0;) {
      if (auto c = drop_action(best, i); c && fails(*c)) {
        best = std::move(*c);
        progress = true;
      }
    }
  }
  return best;
}

}  // namespace electre_score::properties
