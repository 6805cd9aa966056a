#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "electre_score/model.hpp"
#include "electre_score/refsets.hpp"
#include "electre_score/scoring.hpp"

namespace electre_score::properties {

enum class ThresholdKind { Constant, Variable };

/// Upper limits for generated instances. With `vary_sizes` each size is drawn
/// uniformly from [minimum, limit]; otherwise the limits are used exactly.
struct InstanceConfig {
  std::size_t criteria = 5;
  std::size_t levels = 6;
  std::size_t profiles_per_level = 3;
  std::size_t actions = 12;
  bool vary_sizes = true;
  ThresholdKind thresholds = ThresholdKind::Constant;
  bool veto = false;
  // Profiles of every level strictly dominate every profile of lower levels
  // (and sit far enough apart to be strictly preferred), and within-level
  // preferences are pruned so the basic assumptions hold.
  bool strong_dominance = true;
};

struct Instance {
  std::uint64_t seed;
  CriterionSet criteria;
  PerformanceTable table;
  ReferenceStructure refs;
  CuttingLevel lambda;
};

/// Deterministic per (seed, config).
Instance generate_instance(std::uint64_t seed, const InstanceConfig& config);

/// Short hex fingerprint of an instance's full content.
std::string digest(const Instance& instance);

// Generated instances live on a "goodness" scale: level k occupies
// [kBandSpacing·k, kBandSpacing·k + kBandWidth]. Minimized criteria store
// kMinimizeOffset − goodness so that direction handling is exercised.
inline constexpr double kBandSpacing = 20.0;
inline constexpr double kBandWidth = 6.0;
inline constexpr double kMinimizeOffset = 1000.0;

double raw_from_goodness(const Criterion& criterion, double goodness);

struct InsertSet {
  double score;
  std::vector<Alternative> profiles;
};
struct DeleteSet {
  std::size_t level;
};
struct InsertProfile {
  std::size_t level;
  Alternative profile;
};
struct DeleteProfile {
  std::size_t level;
  std::size_t profile;
};

using EditOperation = std::variant<InsertSet, DeleteSet, InsertProfile, DeleteProfile>;

std::string describe(const EditOperation& edit);

/// Pure: returns a new structure. Throws InvalidEdit when the edit would break
/// the structure (duplicate score, fewer than two levels, empty set, bad index).
ReferenceStructure apply_edit(const ReferenceStructure& refs, const EditOperation& edit);

/// Random single edits for `instance`; most keep the dominance bands intact.
std::vector<EditOperation> generate_edits(const Instance& instance, std::mt19937_64& rng,
                                          std::size_t count);

enum class PropertyStatus {
  Passed,
  Failed,
  HypothesisNotMet,
  Vacuous,
  DocumentedDiscrepancy,
  Informational,
};

std::string_view to_string(PropertyStatus status);

struct PropertyFailure {
  std::uint64_t seed = 0;
  std::string digest;
  std::string expected;
  std::string observed;
};

struct PropertyReport {
  std::string property;
  std::size_t trials = 0;  // instances (or pairs) examined
  std::size_t checks = 0;  // individual assertions evaluated
  std::size_t gated = 0;   // trials skipped because a hypothesis did not hold
  std::vector<PropertyFailure> failures;
  std::vector<PropertyFailure> observations;  // report-only findings
  std::vector<std::string> notes;
  PropertyStatus status = PropertyStatus::Passed;

  bool passed() const noexcept { return failures.empty(); }
  /// Accumulates another report's counts and findings (status is recomputed by finalize).
  void absorb(const PropertyReport& other);
  /// Sets `status` from the counts unless it is DocumentedDiscrepancy or Informational.
  void finalize();
};

/// Every interior profile, scored as an action, gets ]x_{k−1}, x_{k+1}[.
/// Gated on the basic assumptions and all four soft separability conditions.
PropertyReport check_conformity(const ReferenceStructure& refs, const CriterionSet& criteria,
                                CuttingLevel lambda, std::uint64_t seed = 0);

/// Single-edit stability plus the exact insertion/deletion case analyses.
/// Each edit is gated on primal and dual soft dominance before and after.
PropertyReport check_stability(const ReferenceStructure& refs, const CriterionSet& criteria,
                               CuttingLevel lambda, std::span<const EditOperation> edits,
                               const PerformanceTable& actions, std::uint64_t seed = 0);

/// Action-vs-set comparison implications and the soft-dominance consequences
/// on bounds; every implication is gated on the conditions it needs.
PropertyReport check_propositions(const ReferenceStructure& refs, const CriterionSet& criteria,
                                  CuttingLevel lambda, const PerformanceTable& actions,
                                  std::uint64_t seed = 0);

/// Greedy minimization: drops criteria, then profiles, then actions while
/// `fails` keeps returning true.
Instance shrink(const Instance& failing, const std::function<bool(const Instance&)>& fails);

struct SuiteOptions {
  std::size_t trials = 500;
  std::uint64_t base_seed = 1;
  InstanceConfig instance;
};

/// Names accepted by run_property, in their canonical order.
const std::vector<std::string>& property_names();

/// Runs `trials` seeded trials (seeds base_seed, base_seed + 1, …) of a named
/// property. Throws InvalidArgument on an unknown name.
PropertyReport run_property(std::string_view name, const SuiteOptions& options);

}  // namespace electre_score::properties
