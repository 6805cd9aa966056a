#include "electre_score/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace electre_score::cli {

using nlohmann::json;
using io::round6;

namespace {

std::string level_name(std::size_t k) { return "x" + std::to_string(k + 1); }

const Alternative* find_profile(const ReferenceStructure& refs, const std::string& id) {
  for (const auto& s : refs.sets()) {
    for (const auto& p : s.profiles) {
      if (p.id == id) return &p;
    }
  }
  return nullptr;
}

const Alternative* find_action(const PerformanceTable& table, const std::string& id) {
  for (const auto& a : table.actions()) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::string cell_text(io::TargetCell c) {
  switch (c) {
    case io::TargetCell::ActionPreferred: return "a>b";
    case io::TargetCell::ProfilePreferred: return "b>a";
    case io::TargetCell::Blank: return "";
    case io::TargetCell::DontCare: return "?";
  }
  return "?";
}

struct SweepCell {
  std::string profile;
  std::string action;
  double sab;  // σ(action, profile)
  double sba;  // σ(profile, action)
  io::TargetCell target;
};

std::string observed_at(const SweepCell& c, double lambda) {
  const bool ab = c.sab >= lambda, ba = c.sba >= lambda;
  if (ab && !ba) return "a>b";
  if (ba && !ab) return "b>a";
  return "";
}

bool matches(const SweepCell& c, double lambda) {
  return c.target == io::TargetCell::DontCare || cell_text(c.target) == observed_at(c, lambda);
}

/// Joins elementary intervals that touch into maximal ones.
std::vector<LambdaInterval> merge(const std::vector<LambdaInterval>& parts) {
  std::vector<LambdaInterval> out;
  for (const auto& p : parts) {
    if (!out.empty() && out.back().hi == p.lo) {
      out.back().hi = p.hi;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

json interval_json(const LambdaInterval& i) {
  return {{"lo", round6(i.lo)}, {"hi", round6(i.hi)}, {"lo_exact", i.lo}, {"hi_exact", i.hi},
          {"text", "]" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + "]"}};
}

}  // namespace

SweepResult sweep_lambda(const CriterionSet& criteria, const PerformanceTable& table,
                         const ReferenceStructure& refs, const io::TargetTable& target,
                         bool dont_care_blanks) {
  std::vector<SweepCell> cells;
  for (std::size_t p = 0; p < target.profiles.size(); ++p) {
    const auto* b = find_profile(refs, target.profiles[p]);
    if (!b) throw Error(ErrorCode::Parse, "target names unknown profile " + target.profiles[p]);
    for (std::size_t i = 0; i < target.actions.size(); ++i) {
      const auto* a = find_action(table, target.actions[i]);
      if (!a) throw Error(ErrorCode::Parse, "target names unknown action " + target.actions[i]);
      auto t = target.cells[p][i];
      if (dont_care_blanks && t == io::TargetCell::Blank) t = io::TargetCell::DontCare;
      cells.push_back({b->id, a->id, credibility(criteria, a->view(), b->view()),
                       credibility(criteria, b->view(), a->view()), t});
    }
  }

  // Crisp relations are constant on ]v_i, v_{i+1}] between consecutive
  // breakpoints, so testing λ = v_{i+1} settles the whole piece.
  std::vector<double> breaks{0.5, 1.0};
  for (const auto& c : cells) {
    for (double s : {c.sab, c.sba}) {
      if (s > 0.5 && s < 1.0) breaks.push_back(s);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  SweepResult result;
  result.cells = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) {
    return c.target != io::TargetCell::DontCare;
  }));
  std::vector<LambdaInterval> exact, best;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const LambdaInterval piece{breaks[i], breaks[i + 1]};
    const auto matched = static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const auto& c) {
          return c.target != io::TargetCell::DontCare && matches(c, piece.hi);
        }));
    if (matched == result.cells) exact.push_back(piece);
    if (matched > result.best_matched || best.empty()) {
      result.best_matched = matched;
      best = {piece};
    } else if (matched == result.best_matched) {
      best.push_back(piece);
    }
  }
  result.intervals = merge(exact);
  result.best_intervals = merge(best);
  if (!best.empty()) {
    for (const auto& c : cells) {
      if (!matches(c, best.front().hi)) {
        result.best_mismatches.push_back(
            {c.profile, c.action, cell_text(c.target), observed_at(c, best.front().hi)});
      }
    }
  }
  return result;
}

json sweep_report(const SweepResult& r) {
  json out;
  out["cells"] = r.cells;
  out["intervals"] = json::array();
  for (const auto& i : r.intervals) out["intervals"].push_back(interval_json(i));
  json best;
  best["matched"] = r.best_matched;
  best["intervals"] = json::array();
  for (const auto& i : r.best_intervals) best["intervals"].push_back(interval_json(i));
  best["mismatches"] = json::array();
  for (const auto& m : r.best_mismatches) {
    best["mismatches"].push_back(
        {{"profile", m.profile}, {"action", m.action}, {"expected", m.expected}, {"observed", m.observed}});
  }
  out["best_fit"] = best;
  return out;
}

json evaluate_report(const io::Model& model, const PerformanceTable& table, CuttingLevel lambda,
                     const ScoringResult& result, const std::vector<bool>& comparable) {
  json out;
  out["lambda"] = round6(lambda.value());
  out["method"] = result.fast_path ? "fast" : "general";
  out["reference_scores"] = json::array();
  for (double x : model.refs.scores()) out["reference_scores"].push_back(round6(x));
  auto bound = [](const std::optional<Bound>& b) -> json {
    if (!b) return nullptr;
    return {{"score", round6(b->score)}, {"level", b->level + 1}};
  };
  out["actions"] = json::array();
  for (std::size_t i = 0; i < result.ranges.size(); ++i) {
    const auto& r = result.ranges[i];
    json a;
    a["id"] = r.action;
    a["lower"] = bound(r.lower);
    a["upper"] = bound(r.upper);
    a["comparable"] = static_cast<bool>(comparable[i]);
    a["classification"] = json::array();
    for (auto c : r.classification) a["classification"].push_back(std::string(to_string(c)));
    a["errors"] = r.errors;
    out["actions"].push_back(a);
  }
  out["findings"] = json::array();
  for (const auto& f : result.findings) {
    out["findings"].push_back({{"action", f.action}, {"condition", f.condition},
                               {"level", f.level + 1}, {"message", f.message}});
  }
  out["basic_assumptions"] = json::array();
  for (const auto& v : result.basic_violations) {
    out["basic_assumptions"].push_back(v.describe(model.refs));
  }
  const auto& s = result.separability;
  out["separability"] = {{"strong_dominance", s.strong_dominance},
                         {"soft_dominance_primal", s.soft_dominance_primal},
                         {"soft_dominance_dual", s.soft_dominance_dual},
                         {"strong_preference", s.strong_preference},
                         {"soft_preference_primal", s.soft_preference_primal},
                         {"soft_preference_dual", s.soft_preference_dual}};
  out["warnings"] = model.warnings;
  (void)table;
  return out;
}

json validate_report(const io::Model& model, const PerformanceTable* table,
                     std::optional<CuttingLevel> lambda) {
  json out;
  const PerformanceTable empty;
  const auto report = validate_model(model.criteria, table ? *table : empty, model.refs);
  out["model"] = json::array();
  for (const auto& v : report.violations) {
    out["model"].push_back({{"subject", v.subject}, {"message", v.message}});
  }
  out["warnings"] = model.warnings;
  if (!report.ok()) return out;

  const auto criteria = model.criterion_set();
  // Dominance flags do not depend on λ; without one only those are reported.
  const auto sep = check_separability(model.refs, criteria, lambda.value_or(CuttingLevel(1.0)));
  if (lambda) {
    out["lambda"] = round6(lambda->value());
    const auto violations = validate_basic_assumptions(model.refs, criteria, *lambda);
    out["basic_assumptions"] = {{"ok", violations.empty()}, {"violations", json::array()}};
    for (const auto& v : violations) {
      out["basic_assumptions"]["violations"].push_back(v.describe(model.refs));
    }
  }
  json flags = {{"strong_dominance", sep.strong_dominance},
                {"soft_dominance_primal", sep.soft_dominance_primal},
                {"soft_dominance_dual", sep.soft_dominance_dual}};
  if (lambda) {
    flags["strong_preference"] = sep.strong_preference;
    flags["soft_preference_primal"] = sep.soft_preference_primal;
    flags["soft_preference_dual"] = sep.soft_preference_dual;
  }
  json failures = json::array();
  for (const auto& p : sep.pairs) {
    std::vector<std::string> failed;
    if (!p.strong_dominance) failed.emplace_back("strong_dominance");
    if (!p.soft_dominance_primal) failed.emplace_back("soft_dominance_primal");
    if (!p.soft_dominance_dual) failed.emplace_back("soft_dominance_dual");
    if (lambda) {
      if (!p.strong_preference) failed.emplace_back("strong_preference");
      if (!p.soft_preference_primal) failed.emplace_back("soft_preference_primal");
      if (!p.soft_preference_dual) failed.emplace_back("soft_preference_dual");
    }
    if (!failed.empty()) {
      failures.push_back({{"lower", level_name(p.lower)}, {"upper", level_name(p.upper)}, {"failed", failed}});
    }
  }
  out["separability"] = {{"flags", flags}, {"failures", failures}};

  if (table && lambda) {
    const auto ok = check_comparability(*table, model.refs, criteria, *lambda);
    out["comparability"] = json::array();
    for (std::size_t i = 0; i < ok.size(); ++i) {
      out["comparability"].push_back({{"action", table->action(i).id}, {"comparable", static_cast<bool>(ok[i])}});
    }
  }
  return out;
}

std::string sigma_csv(const CriterionSet& criteria, const PerformanceTable& table,
                      const ReferenceStructure& refs) {
  const auto m = CredibilityMatrix::build(criteria, table, refs);
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << "sigma";
  for (const auto& id : m.entities()) os << ',' << id;
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << m.entities()[i];
    for (std::size_t j = 0; j < m.size(); ++j) os << ',' << round6(m.sigma(i, j));
    os << '\n';
  }
  return os.str();
}

json property_report(const properties::PropertyReport& r) {
  constexpr std::size_t kListed = 20;
  auto list = [&](const std::vector<properties::PropertyFailure>& fs) {
    json arr = json::array();
    for (std::size_t i = 0; i < std::min(fs.size(), kListed); ++i) {
      arr.push_back({{"seed", fs[i].seed}, {"digest", fs[i].digest},
                     {"expected", fs[i].expected}, {"observed", fs[i].observed}});
    }
    return arr;
  };
  return {{"property", r.property},
          {"status", std::string(properties::to_string(r.status))},
          {"trials", r.trials},
          {"checks", r.checks},
          {"gated", r.gated},
          {"failure_count", r.failures.size()},
          {"failures", list(r.failures)},
          {"observation_count", r.observations.size()},
          {"observations", list(r.observations)},
          {"notes", r.notes}};
}

VerifyConfig parse_verify_config(const json& doc) {
  VerifyConfig c;
  try {
    c.properties = doc.value("properties", properties::property_names());
    c.options.trials = doc.value("trials", c.options.trials);
    c.options.base_seed = doc.value("base_seed", c.options.base_seed);
    if (doc.contains("instance")) {
      const auto& i = doc.at("instance");
      auto& cfg = c.options.instance;
      cfg.criteria = i.value("criteria", cfg.criteria);
      cfg.levels = i.value("levels", cfg.levels);
      cfg.profiles_per_level = i.value("profiles_per_level", cfg.profiles_per_level);
      cfg.actions = i.value("actions", cfg.actions);
      cfg.vary_sizes = i.value("vary_sizes", cfg.vary_sizes);
      cfg.veto = i.value("veto", cfg.veto);
      cfg.strong_dominance = i.value("strong_dominance", cfg.strong_dominance);
      const auto t = i.value("thresholds", std::string("constant"));
      if (t != "constant" && t != "variable") {
        throw Error(ErrorCode::Parse, "instance.thresholds must be constant or variable");
      }
      cfg.thresholds = t == "variable" ? properties::ThresholdKind::Variable
                                       : properties::ThresholdKind::Constant;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("verify config: ") + e.what());
  }
  for (const auto& p : c.properties) {
    const auto& names = properties::property_names();
    if (std::find(names.begin(), names.end(), p) == names.end()) {
      throw Error(ErrorCode::Parse, "verify config names unknown property " + p);
    }
  }
  return c;
}

namespace {

struct Options {
  std::string model;
  std::string performance;
  std::string target;
  std::string config;
  std::optional<double> lambda;
  bool force = false;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  bool dont_care_blanks = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + o.output);
  out << text;
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

PerformanceTable performances(const Options& o, const io::Model& m) {
  if (!o.performance.empty()) return io::load_performance_csv(o.performance, m.criteria);
  if (m.actions) return *m.actions;
  throw Error(ErrorCode::Parse, "no performance table: pass a CSV file or embed actions in the model");
}

std::optional<CuttingLevel> lambda_of(const Options& o, const io::Model& m) {
  const auto v = o.lambda ? o.lambda : m.lambda;
  if (!v) return std::nullopt;
  return CuttingLevel(*v);
}

int report_model_violations(const ValidationReport& report) {
  for (const auto& v : report.violations) std::cerr << "invalid: " << v.subject << ": " << v.message << '\n';
  return kValidationError;
}

int cmd_evaluate(const Options& o) {
  const auto model = io::load_model(o.model);
  warn(model.warnings);
  const auto table = performances(o, model);
  const auto lambda = lambda_of(o, model);
  if (!lambda) throw Error(ErrorCode::Parse, "no cutting level: pass --lambda or use sweep-lambda");
  if (const auto report = validate_model(model.criteria, table, model.refs); !report.ok()) {
    return report_model_violations(report);
  }
  const auto criteria = model.criterion_set();
  ScoringOptions options;
  options.force = o.force;
  const auto result = score_ranges(table, model.refs, criteria, *lambda, options);
  if (!result.basic_violations.empty()) {
    std::cerr << "warning: --force: scoring despite " << result.basic_violations.size()
              << " basic-assumption violation(s)\n";
  }
  const auto comparable = check_comparability(table, model.refs, criteria, *lambda);
  emit(o, io::dump(evaluate_report(model, table, *lambda, result, comparable)));

  std::vector<std::string> bad;
  for (std::size_t i = 0; i < table.action_count(); ++i) {
    if (!comparable[i] || !result.ranges[i].defined()) bad.push_back(table.action(i).id);
  }
  if (!bad.empty()) {
    std::cerr << "comparability failure:";
    for (const auto& id : bad) std::cerr << ' ' << id;
    std::cerr << '\n';
    return kComparabilityError;
  }
  return kOk;
}

int cmd_validate(const Options& o) {
  const auto model = io::load_model(o.model);
  std::optional<PerformanceTable> table;
  if (!o.performance.empty() || model.actions) table = performances(o, model);
  const auto lambda = lambda_of(o, model);
  const auto doc = validate_report(model, table ? &*table : nullptr, lambda);
  emit(o, io::dump(doc));
  if (!doc["model"].empty()) return kValidationError;
  if (doc.contains("basic_assumptions") && !doc["basic_assumptions"]["ok"].get<bool>()) {
    return kValidationError;
  }
  if (doc.contains("comparability")) {
    for (const auto& c : doc["comparability"]) {
      if (!c["comparable"].get<bool>()) return kComparabilityError;
    }
  }
  return kOk;
}

int cmd_sigma(const Options& o) {
  const auto model = io::load_model(o.model);
  std::optional<PerformanceTable> table;
  if (!o.performance.empty() || model.actions) table = performances(o, model);
  const PerformanceTable empty;
  const auto& t = table ? *table : empty;
  if (const auto report = validate_model(model.criteria, t, model.refs); !report.ok()) {
    return report_model_violations(report);
  }
  emit(o, sigma_csv(model.criterion_set(), t, model.refs));
  return kOk;
}

int cmd_sweep(const Options& o) {
  const auto model = io::load_model(o.model);
  const auto table = performances(o, model);
  if (const auto report = validate_model(model.criteria, table, model.refs); !report.ok()) {
    return report_model_violations(report);
  }
  const auto target = io::load_target_csv(o.target);
  const auto result = sweep_lambda(model.criterion_set(), table, model.refs, target, o.dont_care_blanks);
  emit(o, io::dump(sweep_report(result)));
  if (result.intervals.empty()) {
    std::cerr << "EmptyResult: no cutting level reproduces the target; best fit matches "
              << result.best_matched << " of " << result.cells << " cells\n";
    return kValidationError;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyConfig config;
  if (!o.config.empty()) {
    json doc;
    try {
      doc = json::parse(io::read_file(o.config));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, o.config + ": " + e.what());
    }
    config = parse_verify_config(doc);
  } else {
    config.properties = properties::property_names();
  }
  if (o.seed) config.options.base_seed = *o.seed;
  if (o.trials) config.options.trials = *o.trials;

  json out;
  out["trials"] = config.options.trials;
  out["base_seed"] = config.options.base_seed;
  out["reports"] = json::array();
  bool failed = false;
  for (const auto& name : config.properties) {
    const auto r = properties::run_property(name, config.options);
    failed = failed || r.status == properties::PropertyStatus::Failed;
    out["reports"].push_back(property_report(r));
  }
  out["passed"] = !failed;
  emit(o, io::dump(out));
  return failed ? kPropertyFailure : kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument: return kParseError;
    case ErrorCode::NoLowerBound:
    case ErrorCode::NoUpperBound: return kComparabilityError;
    default: return kValidationError;
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Score ranges for actions against scored reference sets (ELECTRE-Score)"};
  app.require_subcommand(1);
  Options o;

  auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option_function<double>("--lambda", [&](double v) { o.lambda = v; },
                                     "Cutting level in ]0.5, 1]");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", o.output, "Write the report here instead of stdout");
  };

  auto* evaluate = app.add_subcommand("evaluate", "Assign a score range to every action");
  evaluate->add_option("model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
  evaluate->add_option("performance", o.performance, "Performance CSV (optional if embedded)")
      ->check(CLI::ExistingFile);
  add_lambda(evaluate);
  evaluate->add_flag("--force", o.force, "Score even if the basic assumptions are violated");
  add_output(evaluate);

  auto* validate = app.add_subcommand("validate", "Check the model, basic assumptions and separability");
  validate->add_option("model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
  validate->add_option("performance", o.performance, "Performance CSV")->check(CLI::ExistingFile);
  add_lambda(validate);
  add_output(validate);

  auto* sigma = app.add_subcommand("sigma", "Dump the credibility matrix as CSV");
  sigma->add_option("model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
  sigma->add_option("performance", o.performance, "Performance CSV")->check(CLI::ExistingFile);
  add_output(sigma);

  auto* sweep = app.add_subcommand("sweep-lambda", "Find the cutting levels reproducing a target table");
  sweep->add_option("model", o.model, "Model JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("performance", o.performance, "Performance CSV")->required()->check(CLI::ExistingFile);
  sweep->add_option("target", o.target, "Target relation CSV")->required()->check(CLI::ExistingFile);
  sweep->add_flag("--dont-care-blanks", o.dont_care_blanks, "Blank target cells constrain nothing");
  add_output(sweep);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("config", o.config, "Verify config JSON")->check(CLI::ExistingFile);
  verify->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { o.seed = v; }, "Base seed");
  verify->add_option_function<std::size_t>("--trials", [&](std::size_t v) { o.trials = v; },
                                           "Trials per property");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*evaluate) return cmd_evaluate(o);
    if (*validate) return cmd_validate(o);
    if (*sigma) return cmd_sigma(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace electre_score::cli
