#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "electre_score/io.hpp"
#include "electre_score/properties.hpp"

namespace electre_score::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kValidationError = 3,
  kComparabilityError = 4,
  kPropertyFailure = 5,
};

/// Half-open λ interval ]lo, hi].
struct LambdaInterval {
  double lo = 0.5;
  double hi = 1.0;
};

struct CellMismatch {
  std::string profile;
  std::string action;
  std::string expected;
  std::string observed;
};

struct SweepResult {
  std::vector<LambdaInterval> intervals;  // maximal, disjoint, increasing
  std::size_t cells = 0;                  // constrained cells in the target
  // Best partial fit, reported whatever the outcome.
  std::size_t best_matched = 0;
  std::vector<LambdaInterval> best_intervals;
  std::vector<CellMismatch> best_mismatches;  // at the first best interval
};

/// Exact λ sweep: relations only change at credibility values, so every
/// elementary interval between consecutive breakpoints is tested once.
SweepResult sweep_lambda(const CriterionSet& criteria, const PerformanceTable& table,
                         const ReferenceStructure& refs, const io::TargetTable& target,
                         bool dont_care_blanks = false);

nlohmann::json sweep_report(const SweepResult& result);

/// The evaluate report: ranges, per-level classifications and findings.
nlohmann::json evaluate_report(const io::Model& model, const PerformanceTable& table,
                               CuttingLevel lambda, const ScoringResult& result,
                               const std::vector<bool>& comparable);

nlohmann::json validate_report(const io::Model& model, const PerformanceTable* table,
                               std::optional<CuttingLevel> lambda);

std::string sigma_csv(const CriterionSet& criteria, const PerformanceTable& table,
                      const ReferenceStructure& refs);

nlohmann::json property_report(const properties::PropertyReport& report);

/// Reads a verify config: {"properties": [...], "trials": n, "base_seed": s,
/// "instance": {"criteria": .., "levels": .., "profiles_per_level": .., "actions": ..,
/// "vary_sizes": .., "thresholds": "constant"|"variable", "veto": .., "strong_dominance": ..}}.
struct VerifyConfig {
  std::vector<std::string> properties;
  properties::SuiteOptions options;
};

VerifyConfig parse_verify_config(const nlohmann::json& doc);

/// Entry point used by the executable; returns the process exit code.
int run(int argc, char** argv);

}  // namespace electre_score::cli
