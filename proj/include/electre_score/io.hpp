#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "electre_score/model.hpp"
#include "electre_score/scoring.hpp"

namespace electre_score::io {

/// Everything a model file carries. Reference scores come either directly
/// from each set or from a deck-of-cards block; direct scores win.
struct Model {
  std::vector<Criterion> criteria;
  ReferenceStructure refs;
  std::optional<double> lambda;
  double tolerance = 0.0;
  std::optional<DeckOfCards> deck;
  std::optional<PerformanceTable> actions;  // embedded performances, if any
  std::vector<std::string> warnings;

  CriterionSet criterion_set() const { return CriterionSet(criteria, tolerance); }
};

/// Parses "33.5", "100/3" or a JSON number. Throws Error(Parse).
double parse_score(const nlohmann::json& value);

Model parse_model(const nlohmann::json& doc);
Model load_model(const std::filesystem::path& path);

/// CSV with header `id,<criterion names…>`; columns are matched by name.
PerformanceTable parse_performance_csv(std::string_view text,
                                       const std::vector<Criterion>& criteria);
PerformanceTable load_performance_csv(const std::filesystem::path& path,
                                      const std::vector<Criterion>& criteria);

enum class TargetCell { ActionPreferred, ProfilePreferred, Blank, DontCare };

/// Expected relation per (profile, action): header `profile,<action ids…>`,
/// cells `a>b`, `b>a`, blank, or `?`.
struct TargetTable {
  std::vector<std::string> profiles;
  std::vector<std::string> actions;
  std::vector<std::vector<TargetCell>> cells;  // [profile][action]
};

TargetTable parse_target_csv(std::string_view text);
TargetTable load_target_csv(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

/// Rounds to six decimals so reports are stable and re-serialize identically.
double round6(double v);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace electre_score::io
