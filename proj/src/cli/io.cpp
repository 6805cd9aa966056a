#include "electre_score/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace electre_score::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::Parse, message); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!trim(line).empty()) out.push_back(line);
  }
  return out;
}

double parse_number(const std::string& cell, const std::string& where) {
  if (cell.empty()) parse_error("missing value for " + where);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    parse_error("not a number for " + where + ": '" + cell + "'");
  }
  if (used != cell.size()) parse_error("not a number for " + where + ": '" + cell + "'");
  return v;
}

ThresholdSpec parse_threshold(const json& j, const std::string& where) {
  if (j.is_number()) return ThresholdSpec::constant(j.get<double>());
  if (!j.is_object()) parse_error(where + " must be a number or an object");
  ThresholdSpec t;
  t.intercept = j.value("intercept", 0.0);
  t.slope = j.value("slope", 0.0);
  const auto mode = j.value("mode", std::string("constant"));
  if (mode == "constant") {
    t.mode = ThresholdMode::Constant;
  } else if (mode == "direct") {
    t.mode = ThresholdMode::Direct;
  } else if (mode == "inverse") {
    t.mode = ThresholdMode::Inverse;
  } else {
    parse_error(where + ": unknown mode '" + mode + "'");
  }
  return t;
}

Criterion parse_criterion(const json& j) {
  Criterion c;
  c.name = j.at("name").get<std::string>();
  const auto dir = j.value("direction", std::string("max"));
  if (dir == "max" || dir == "maximize") {
    c.direction = Direction::Maximize;
  } else if (dir == "min" || dir == "minimize") {
    c.direction = Direction::Minimize;
  } else {
    parse_error("criterion " + c.name + ": unknown direction '" + dir + "'");
  }
  c.weight = j.at("weight").get<double>();
  c.indifference = parse_threshold(j.value("indifference", json(0.0)), c.name + ".indifference");
  c.preference = parse_threshold(j.value("preference", json(0.0)), c.name + ".preference");
  if (j.contains("veto") && !j.at("veto").is_null()) {
    c.veto = parse_threshold(j.at("veto"), c.name + ".veto");
  }
  c.ordinal = j.value("ordinal", false);
  return c;
}

Alternative parse_alternative(const json& j, std::size_t n, const char* key) {
  Alternative a;
  a.id = j.at(key).get<std::string>();
  a.values = j.at("values").get<std::vector<double>>();
  if (a.values.size() != n) {
    parse_error(a.id + " has " + std::to_string(a.values.size()) + " values, expected " +
                std::to_string(n));
  }
  return a;
}

}  // namespace

double parse_score(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (!value.is_string()) parse_error("score must be a number or a \"p/q\" string");
  const auto s = value.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_number(trim(s), "score");
  const double num = parse_number(trim(s.substr(0, slash)), "score numerator");
  const double den = parse_number(trim(s.substr(slash + 1)), "score denominator");
  if (den == 0.0) parse_error("score '" + s + "' divides by zero");
  return num / den;
}

Model parse_model(const json& doc) {
  Model m;
  try {
    for (const auto& c : doc.at("criteria")) m.criteria.push_back(parse_criterion(c));
    const std::size_t n = m.criteria.size();
    m.tolerance = doc.value("tolerance", 0.0);
    if (doc.contains("lambda") && !doc.at("lambda").is_null()) m.lambda = doc.at("lambda").get<double>();

    if (doc.contains("deck_of_cards")) {
      const auto& d = doc.at("deck_of_cards");
      m.deck = DeckOfCards{d.at("blank_cards").get<std::vector<int>>(), parse_score(d.value("low", json(0.0))),
                           parse_score(d.value("high", json(100.0)))};
    }

    const auto& sets = doc.at("reference_sets");
    std::optional<std::vector<double>> deck_scores;
    if (m.deck) {
      if (m.deck->level_count() != sets.size()) {
        parse_error("deck_of_cards describes " + std::to_string(m.deck->level_count()) +
                    " levels but there are " + std::to_string(sets.size()) + " reference sets");
      }
      deck_scores = deck_of_cards_scores(*m.deck);
    }
    std::vector<ReferenceSet> out;
    bool direct_and_deck = false;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      const auto& s = sets[k];
      ReferenceSet rs;
      if (s.contains("score")) {
        rs.score = parse_score(s.at("score"));
        direct_and_deck = direct_and_deck || deck_scores.has_value();
      } else if (deck_scores) {
        rs.score = (*deck_scores)[k];
      } else {
        parse_error("reference set " + std::to_string(k + 1) + " has no score and no deck_of_cards");
      }
      for (const auto& p : s.at("profiles")) rs.profiles.push_back(parse_alternative(p, n, "name"));
      if (rs.profiles.empty()) parse_error("reference set " + std::to_string(k + 1) + " is empty");
      out.push_back(std::move(rs));
    }
    if (direct_and_deck) {
      m.warnings.push_back(
          "both direct scores and a deck_of_cards block are given; direct scores are used "
          "(the deck formula may not reproduce listed scores)");
    }
    m.refs = ReferenceStructure(n, std::move(out));

    if (doc.contains("actions")) {
      std::vector<Alternative> rows;
      for (const auto& a : doc.at("actions")) rows.push_back(parse_alternative(a, n, "id"));
      m.actions = PerformanceTable(n, std::move(rows));
    }
  } catch (const json::exception& e) {
    parse_error(std::string("model: ") + e.what());
  }
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Model load_model(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return parse_model(doc);
}

PerformanceTable parse_performance_csv(std::string_view text,
                                       const std::vector<Criterion>& criteria) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_error("performance table is empty");
  const auto header = split_csv_line(lines.front());
  std::vector<std::size_t> column(criteria.size(), 0);
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const auto it = std::find(header.begin() + 1, header.end(), criteria[j].name);
    if (it == header.end()) parse_error("performance table has no column for " + criteria[j].name);
    column[j] = static_cast<std::size_t>(it - header.begin());
  }
  std::vector<Alternative> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv_line(lines[i]);
    Alternative a;
    a.id = cells.front();
    if (a.id.empty()) parse_error("row " + std::to_string(i + 1) + " has no action id");
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      const std::string where = a.id + " / " + criteria[j].name;
      if (column[j] >= cells.size()) parse_error("missing value for " + where);
      a.values.push_back(parse_number(cells[column[j]], where));
    }
    rows.push_back(std::move(a));
  }
  return PerformanceTable(criteria.size(), std::move(rows));
}

PerformanceTable load_performance_csv(const std::filesystem::path& path,
                                      const std::vector<Criterion>& criteria) {
  return parse_performance_csv(read_file(path), criteria);
}

TargetTable parse_target_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_error("target table is empty");
  TargetTable t;
  const auto header = split_csv_line(lines.front());
  t.actions.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    cells.resize(header.size());
    t.profiles.push_back(cells.front());
    std::vector<TargetCell> row;
    for (std::size_t j = 1; j < cells.size(); ++j) {
      const auto& c = cells[j];
      if (c == "a>b") {
        row.push_back(TargetCell::ActionPreferred);
      } else if (c == "b>a") {
        row.push_back(TargetCell::ProfilePreferred);
      } else if (c.empty()) {
        row.push_back(TargetCell::Blank);
      } else if (c == "?") {
        row.push_back(TargetCell::DontCare);
      } else {
        parse_error("target cell " + cells.front() + " / " + header[j] + ": '" + c + "'");
      }
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

TargetTable load_target_csv(const std::filesystem::path& path) {
  return parse_target_csv(read_file(path));
}

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace electre_score::io
