#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "electre_score/model.hpp"

namespace electre_score {

/// Pseudo-criterion comparison of a against b on a single criterion.
enum class CriterionRelation { StrictPrefA, WeakPrefA, Indifferent, WeakPrefB, StrictPrefB };

/// The four mutually exclusive outcomes of (a ≿ b, b ≿ a).
enum class DerivedRelation { APreferred, BPreferred, Indifferent, Incomparable };

std::string_view to_string(CriterionRelation r);
std::string_view to_string(DerivedRelation r);

/// Direction-adjusted difference: positive means a performs better than b.
double advantage(const Criterion& criterion, double ga, double gb);

/// Evaluates a threshold for the pair (ga, gb). Direct thresholds are anchored to
/// the worse of the two performances, Inverse ones to the better.
/// Throws NegativeThreshold when the result is below zero.
double threshold_at(const ThresholdSpec& spec, const Criterion& criterion, double ga, double gb);

CriterionRelation per_criterion_relation(const Criterion& criterion, double ga, double gb,
                                         double tolerance = 0.0);

/// Comprehensive concordance c(a, b) in [0, 1].
double concordance(const CriterionSet& criteria, PerformanceView a, PerformanceView b);

/// Per-criterion discordance d_j(a, b); zero when the criterion has no veto.
double discordance(const Criterion& criterion, double ga, double gb, double tolerance = 0.0);

/// Credibility σ(a, b): concordance weakened by every discordance that exceeds it.
double credibility(const CriterionSet& criteria, PerformanceView a, PerformanceView b);

bool crisp_outranks(double sigma, CuttingLevel lambda);

DerivedRelation derived_relation(bool a_outranks_b, bool b_outranks_a);

/// Derived relation of a against b from both credibilities.
DerivedRelation compare(double sigma_ab, double sigma_ba, CuttingLevel lambda);
DerivedRelation compare(const CriterionSet& criteria, PerformanceView a, PerformanceView b,
                        CuttingLevel lambda);

/// a Δ b: at least as good everywhere and strictly better somewhere.
bool dominates(const CriterionSet& criteria, PerformanceView a, PerformanceView b);

/// σ over every ordered pair of entities (all actions first, then all profiles
/// in level order).
class CredibilityMatrix {
 public:
  static CredibilityMatrix build(const CriterionSet& criteria, const PerformanceTable& table,
                                 const ReferenceStructure& refs);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& entities() const noexcept { return ids_; }
  double sigma(std::size_t from, std::size_t to) const { return sigma_[from * ids_.size() + to]; }
  std::size_t index_of(const std::string& id) const;
  double sigma(const std::string& from, const std::string& to) const {
    return sigma(index_of(from), index_of(to));
  }

 private:
  std::vector<std::string> ids_;
  std::vector<double> sigma_;
};

}  // namespace electre_score
