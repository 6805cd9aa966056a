#include <algorithm>
#include <sstream>

#include "electre_score/properties.hpp"
#include "random.hpp"

namespace electre_score::properties {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_level(const ReferenceStructure& refs, std::size_t level) {
  if (level >= refs.level_count()) {
    throw Error(ErrorCode::InvalidEdit, "level " + std::to_string(level + 1) + " does not exist");
  }
}

void check_profile(const ReferenceStructure& refs, const Alternative& profile) {
  if (profile.values.size() != refs.criterion_count()) {
    throw Error(ErrorCode::InvalidEdit,
                "profile " + profile.id + " has the wrong number of performances");
  }
}

}  // namespace

std::string describe(const EditOperation& edit) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const InsertSet& e) {
                   os << "insert set with score " << e.score << " (" << e.profiles.size()
                      << " profiles)";
                 },
                 [&](const DeleteSet& e) { os << "delete set x" << e.level + 1; },
                 [&](const InsertProfile& e) {
                   os << "insert profile " << e.profile.id << " into x" << e.level + 1;
                 },
                 [&](const DeleteProfile& e) {
                   os << "delete profile " << e.profile + 1 << " of x" << e.level + 1;
                 },
             },
             edit);
  return os.str();
}

ReferenceStructure apply_edit(const ReferenceStructure& refs, const EditOperation& edit) {
  auto sets = refs.sets();
  std::visit(overloaded{
                 [&](const InsertSet& e) {
                   if (e.profiles.empty()) {
                     throw Error(ErrorCode::InvalidEdit, "inserted set has no profiles");
                   }
                   for (const auto& p : e.profiles) check_profile(refs, p);
                   const auto pos = std::lower_bound(
                       sets.begin(), sets.end(), e.score,
                       [](const ReferenceSet& s, double x) { return s.score < x; });
                   if (pos != sets.end() && pos->score == e.score) {
                     throw Error(ErrorCode::InvalidEdit, "score already present");
                   }
                   sets.insert(pos, ReferenceSet{e.score, e.profiles});
                 },
                 [&](const DeleteSet& e) {
                   check_level(refs, e.level);
                   if (sets.size() <= 2) {
                     throw Error(ErrorCode::InvalidEdit, "deleting would leave fewer than two sets");
                   }
                   sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(e.level));
                 },
                 [&](const InsertProfile& e) {
                   check_level(refs, e.level);
                   check_profile(refs, e.profile);
                   sets[e.level].profiles.push_back(e.profile);
                 },
                 [&](const DeleteProfile& e) {
                   check_level(refs, e.level);
                   auto& profiles = sets[e.level].profiles;
                   if (e.profile >= profiles.size()) {
                     throw Error(ErrorCode::InvalidEdit, "profile index out of range");
                   }
                   if (profiles.size() == 1) {
                     throw Error(ErrorCode::InvalidEdit, "deleting would leave an empty set");
                   }
                   profiles.erase(profiles.begin() + static_cast<std::ptrdiff_t>(e.profile));
                 },
             },
             edit);
  return ReferenceStructure(refs.criterion_count(), std::move(sets));
}

namespace {

std::vector<double> point(std::mt19937_64& rng, const CriterionSet& criteria, double lo,
                          double hi) {
  std::vector<double> v;
  for (const auto& c : criteria) v.push_back(raw_from_goodness(c, detail::half_step(rng, lo, hi)));
  return v;
}

}  // namespace

std::vector<EditOperation> generate_edits(const Instance& instance, std::mt19937_64& rng,
                                          std::size_t count) {
  using detail::coin;
  using detail::uniform;
  using detail::uniform_int;
  const auto& refs = instance.refs;
  const auto& criteria = instance.criteria;
  const std::size_t levels = refs.level_count();
  const double top = kBandSpacing * static_cast<double>(levels - 1) + kBandWidth;

  std::vector<EditOperation> out;
  std::size_t serial = 0;
  auto name = [&serial] { return "e" + std::to_string(++serial); };
  while (out.size() < count) {
    // Most edits respect the goodness bands; the rest are unconstrained and
    // usually fail the hypothesis gate.
    const bool banded = coin(rng, 0.8);
    switch (uniform_int(rng, 0, 3)) {
      case 0: {
        // Gap g lies between level g − 1 and level g (g = 0: below, g = ℓ: above).
        const std::size_t g = uniform_int(rng, 0, levels);
        const double lo_score = g == 0 ? refs.score(0) - 10.0 : refs.score(g - 1);
        const double hi_score = g == levels ? refs.score(levels - 1) + 10.0 : refs.score(g);
        const double score = lo_score + (hi_score - lo_score) * uniform(rng, 0.2, 0.8);
        const double base = kBandSpacing * static_cast<double>(g) - kBandSpacing;
        InsertSet e{score, {}};
        const std::size_t n = uniform_int(rng, 1, 3);
        for (std::size_t p = 0; p < n; ++p) {
          e.profiles.push_back(
              {name(), banded ? point(rng, criteria, base + kBandWidth + 1.0, base + kBandSpacing - 1.0)
                              : point(rng, criteria, 0.0, top)});
        }
        out.emplace_back(std::move(e));
        break;
      }
      case 1:
        if (levels > 2) out.emplace_back(DeleteSet{uniform_int(rng, 0, levels - 1)});
        break;
      case 2: {
        const std::size_t k = uniform_int(rng, 0, levels - 1);
        const double lo = kBandSpacing * static_cast<double>(k);
        out.emplace_back(InsertProfile{
            k, {name(), banded ? point(rng, criteria, lo, lo + kBandWidth)
                               : point(rng, criteria, 0.0, top)}});
        break;
      }
      default: {
        const std::size_t k = uniform_int(rng, 0, levels - 1);
        const std::size_t n = refs.set(k).profiles.size();
        if (n > 1) out.emplace_back(DeleteProfile{k, uniform_int(rng, 0, n - 1)});
        break;
      }
    }
  }
  return out;
}

}  // namespace electre_score::properties
