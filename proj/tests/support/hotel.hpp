#pragma once

#include <filesystem>
#include <string>

#include "electre_score/io.hpp"

namespace test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(FIXTURE_DIR) / name;
}

/// The hotel model with its performance table loaded from the fixtures.
struct Hotel {
  electre_score::io::Model model = electre_score::io::load_model(fixture("hotel_model.json"));
  electre_score::CriterionSet criteria = model.criterion_set();
  electre_score::PerformanceTable table =
      electre_score::io::load_performance_csv(fixture("hotel_performance.csv"), model.criteria);

  electre_score::PerformanceView action(const std::string& id) const {
    for (const auto& a : table.actions()) {
      if (a.id == id) return a.view();
    }
    throw std::out_of_range(id);
  }
  electre_score::PerformanceView profile(const std::string& id) const {
    for (const auto& s : model.refs.sets()) {
      for (const auto& p : s.profiles) {
        if (p.id == id) return p.view();
      }
    }
    throw std::out_of_range(id);
  }
};

}  // namespace test
