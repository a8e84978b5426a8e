#include "khow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "khow/error.hpp"
#include "khow/modelsearch.hpp"
#include "khow/planner.hpp"
#include "khow/proof.hpp"
#include "khow/semantics.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

using Json = nlohmann::ordered_json;

struct FileError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Formula formula_arg(const std::string& text, const char* what) {
  try {
    return parse_formula(text);
  } catch (const FormulaSyntaxError& e) {
    throw FormulaSyntaxError(e.offset(), std::string(what) + ": " + e.detail(), e.expected());
  }
}

std::vector<std::string> names_of(const Model& m, const StateSet& set) {
  std::vector<std::string> out;
  set.for_each([&](StateId s) { out.push_back(m.state_name(s)); });
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* empty) {
  if (xs.empty()) return empty;
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out;
}

// Root as written, or Kh after normalization.
bool reports_global(const Formula& written, const Formula& normal) {
  return is_global(written) || normal.op() == Op::Kh;
}

struct Options {
  bool json = false;

  std::string model_path;
  std::string formula;
  std::string at;

  std::string pre;
  std::string goal;
  std::vector<std::string> actions;

  std::string proof_path;

  std::size_t max_states = 4;
  std::size_t max_actions = 2;
  std::vector<std::string> letters{"p", "q"};
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::uint64_t count = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int check() {
    const Model m = parse_model(read_file(o_.model_path));
    const Formula f = formula_arg(o_.formula, "formula");
    const Extension e = extension(m, f);
    const bool global = reports_global(f, e.formula);
    const auto truth = names_of(m, e.truth_set);

    int status = e.truth_set.is_full() ? kExitAffirmative : kExitNegative;
    std::optional<bool> at_value;
    if (!o_.at.empty()) {
      const auto s = m.find_state(o_.at);
      if (!s) throw ModelError(0, "unknown state '" + o_.at + "'");
      at_value = e.truth_set.contains(*s);
      status = *at_value ? kExitAffirmative : kExitNegative;
    }

    if (o_.json) {
      Json j{{"command", "check"}, {"formula", print_formula(f)}, {"truth_set", truth}};
      if (global) j["global"] = e.truth_set.is_full();
      if (at_value) {
        j["state"] = o_.at;
        j["holds"] = *at_value;
      }
      emit(j);
    } else {
      out_ << "TRUTH SET: " << join(truth, "(none)") << '\n';
      if (global) out_ << (e.truth_set.is_full() ? "GLOBAL-TRUE" : "GLOBAL-FALSE") << '\n';
      if (at_value) out_ << (*at_value ? "TRUE AT: " : "FALSE AT: ") << o_.at << '\n';
    }
    return status;
  }

  int plan() {
    const Model m = parse_model(read_file(o_.model_path));
    const StateSet starts = ext(m, formula_arg(o_.pre, "precondition"));
    const StateSet goals = ext(m, formula_arg(o_.goal, "goal"));
    const PlanResult r = find_plan(m, starts, goals);
    if (o_.json) {
      Json j{{"command", "plan"}, {"found", r.found}};
      j["plan"] = r.found ? Json(r.witness->actions) : Json(nullptr);
      j["explored"] = r.explored;
      emit(j);
    } else if (r.found) {
      out_ << "PLAN: " << to_string(*r.witness) << '\n';
    } else {
      out_ << "NO PLAN\n";
    }
    return r.found ? kExitAffirmative : kExitNegative;
  }

  int verify_plan() {
    const Model m = parse_model(read_file(o_.model_path));
    const StateSet starts = ext(m, formula_arg(o_.pre, "precondition"));
    const StateSet goals = ext(m, formula_arg(o_.goal, "goal"));
    const PlanCheck c = khow::verify_plan(m, starts, goals, Plan{o_.actions});
    if (o_.json) {
      Json j{{"command", "verify-plan"}, {"ok", c.ok()}};
      if (!c.ok()) {
        j["failure"] = c.failure == PlanCheck::Failure::Stuck ? "stuck" : "bad-endpoint";
        if (c.failure == PlanCheck::Failure::Stuck) j["step"] = c.step;
        j["state"] = m.state_name(*c.state);
        j["start"] = m.state_name(*c.start);
        j["reason"] = c.reason;
      }
      emit(j);
    } else if (c.ok()) {
      out_ << "OK\n";
    } else {
      out_ << "FAIL: " << c.reason << '\n';
    }
    return c.ok() ? kExitAffirmative : kExitNegative;
  }

  int prove() {
    const ProofDocument doc = parse_proof(read_file(o_.proof_path));
    const Verdict v = khow::check(doc);
    if (o_.json) {
      Json j{{"command", "prove"}, {"accepted", v.accepted}};
      if (!v.accepted) {
        j["line"] = v.line;
        j["reason"] = v.reason;
      }
      emit(j);
    } else if (v.accepted) {
      out_ << "ACCEPTED\n";
    } else {
      out_ << "REJECTED line " << v.line << ": " << v.reason << '\n';
    }
    return v.accepted ? kExitAffirmative : kExitNegative;
  }

  int countermodel() {
    const Formula f = formula_arg(o_.formula, "formula");
    const GenConfig cfg = config();
    std::uint64_t limit = o_.count;
    if (limit == 0) limit = o_.exhaustive ? std::numeric_limits<std::uint64_t>::max() : 1000;
    const auto cm = find_countermodel(f, cfg, limit);
    if (o_.json) {
      Json j{{"command", "countermodel"}, {"found", cm.has_value()}};
      if (cm) {
        j["index"] = cm->index;
        j["model"] = print_model(cm->model);
        j["state"] = cm->model.state_name(cm->state);
      }
      emit(j);
    } else if (cm) {
      out_ << print_model(cm->model) << "FALSIFIED AT: " << cm->model.state_name(cm->state) << '\n';
    } else {
      out_ << "NONE FOUND\n";
    }
    return cm ? kExitAffirmative : kExitNegative;
  }

  int audit() {
    const AuditReport r = soundness_audit(config(), o_.count);
    if (o_.json) {
      Json vs = Json::array();
      for (const auto& v : r.violations) {
        vs.push_back({{"model_index", v.model_index}, {"check", v.check}, {"assignment", v.assignment},
                      {"model", v.model_text}});
      }
      emit(Json{{"command", "audit"}, {"models", r.models}, {"checks", r.checks},
                {"violation_count", r.violations.size()}, {"violations", vs}});
    } else {
      for (const auto& v : r.violations) {
        out_ << "VIOLATION: model " << v.model_index << ", " << v.check;
        for (const auto& [k, x] : v.assignment) out_ << ' ' << k << '=' << x;
        out_ << '\n' << v.model_text;
      }
      out_ << "MODELS: " << r.models << '\n' << "CHECKS: " << r.checks << '\n';
      out_ << "VIOLATIONS: " << r.violations.size() << '\n';
    }
    return r.violations.empty() ? kExitAffirmative : kExitNegative;
  }

 private:
  GenConfig config() const {
    GenConfig cfg;
    cfg.max_states = o_.max_states;
    cfg.max_actions = o_.max_actions;
    cfg.letters = o_.letters;
    cfg.seed = o_.seed;
    cfg.mode = o_.exhaustive ? GenMode::Exhaustive : GenMode::Random;
    return cfg;
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  const Options& o_;
  std::ostream& out_;
};

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-states", o.max_states, "largest state count")->capture_default_str();
  cmd->add_option("--max-actions", o.max_actions, "action count")->capture_default_str();
  cmd->add_option("--letters", o.letters, "proposition letters")->delimiter(',')->capture_default_str();
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Knowing-how logic toolkit", "kh"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit one JSON document instead of text");

  auto* check = app.add_subcommand("check", "truth set of a formula in a model");
  check->add_option("MODEL", o.model_path)->required();
  check->add_option("FORMULA", o.formula)->required();
  check->add_option("--at", o.at, "report the value at one state");

  auto* plan = app.add_subcommand("plan", "search for a plan from PRE-states to GOAL-states");
  for (auto* cmd : {plan, app.add_subcommand("verify-plan", "check a given plan")}) {
    cmd->add_option("MODEL", o.model_path)->required();
    cmd->add_option("PRE", o.pre)->required();
    cmd->add_option("GOAL", o.goal)->required();
  }
  auto* verify = app.get_subcommand("verify-plan");
  verify->add_option("ACTIONS", o.actions, "the plan, one action per argument");

  auto* prove = app.add_subcommand("prove", "check a proof file");
  prove->add_option("FILE", o.proof_path)->required();

  auto* counter = app.add_subcommand("countermodel", "search small models for one falsifying a formula");
  counter->add_option("FORMULA", o.formula)->required();
  add_search_flags(counter, o);
  auto* seed_opt = counter->add_option("--seed", o.seed, "random stream seed");
  counter->add_flag("--exhaustive", o.exhaustive, "enumerate every model of the given size")->excludes(seed_opt);
  counter->add_option("--count", o.count, "models to scan (default 1000, or all when exhaustive)");

  auto* audit = app.add_subcommand("audit", "evaluate the validity schemas on generated models");
  o.count = 0;
  audit->add_option("--models", o.count, "models to audit")->required();
  audit->add_option("--seed", o.seed, "random stream seed");
  add_search_flags(audit, o);
  audit->add_flag("--exhaustive", o.exhaustive, "enumerate instead of sampling");

  std::vector<const char*> argv{"kh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "kh: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) err << sub->help();
    return kExitUsage;
  }

  Runner run(o, out);
  try {
    if (check->parsed()) return run.check();
    if (plan->parsed()) return run.plan();
    if (verify->parsed()) return run.verify_plan();
    if (prove->parsed()) return run.prove();
    if (counter->parsed()) return run.countermodel();
    return run.audit();
  } catch (const Error& e) {
    err << "kh: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace khow
