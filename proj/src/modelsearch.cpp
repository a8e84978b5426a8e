#include "khow/modelsearch.hpp"

#include <stdexcept>

#include "khow/error.hpp"
#include "khow/planner.hpp"
#include "khow/proof.hpp"
#include "khow/semantics.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

constexpr std::size_t kExhaustiveMaxStates = 4;
constexpr std::size_t kExhaustiveMaxActions = 2;

std::string action_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

std::size_t valuation_bits(const GenConfig& cfg) { return cfg.max_states * cfg.letters.size(); }
std::size_t edge_bits(const GenConfig& cfg) { return cfg.max_actions * cfg.max_states * cfg.max_states; }

}  // namespace

void GenConfig::validate() const {
  if (max_states == 0) throw ConfigError("max_states must be at least 1");
  if (max_actions == 0) throw ConfigError("max_actions must be at least 1");
  for (const auto& l : letters) {
    if (!is_valid_letter(l)) throw ConfigError("invalid proposition letter '" + l + "'");
  }
  if (mode == GenMode::Exhaustive) {
    if (max_states > kExhaustiveMaxStates || max_actions > kExhaustiveMaxActions) {
      throw ConfigError("exhaustive enumeration is limited to 4 states and 2 actions");
    }
    if (valuation_bits(*this) + edge_bits(*this) > 62) {
      throw ConfigError("exhaustive enumeration space too large for this many letters");
    }
  }
}

std::uint64_t exhaustive_model_count(const GenConfig& cfg) {
  cfg.validate();
  return std::uint64_t{1} << (valuation_bits(cfg) + edge_bits(cfg));
}

ModelStream::ModelStream(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  cfg_.validate();
  if (cfg_.mode == GenMode::Exhaustive) total_ = exhaustive_model_count(cfg_);
}

std::optional<Model> ModelStream::next() {
  if (cfg_.mode == GenMode::Exhaustive) {
    if (produced_ >= total_) return std::nullopt;
    return enumerated_model(produced_++);
  }
  ++produced_;
  return random_model();
}

Model ModelStream::random_model() {
  const std::size_t n = 1 + static_cast<std::size_t>(rng_() % cfg_.max_states);
  ModelBuilder b;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> val;
    for (const auto& l : cfg_.letters) {
      if (rng_() & 1U) val.push_back(l);
    }
    b.add_state("s" + std::to_string(s + 1), std::move(val));
  }
  for (std::size_t a = 0; a < cfg_.max_actions; ++a) {
    const ActionId act = b.add_action(action_label(a));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (rng_() & 1U) b.add_transition(static_cast<StateId>(s), act, static_cast<StateId>(t));
      }
    }
  }
  return std::move(b).build();
}

Model ModelStream::enumerated_model(std::uint64_t index) const {
  const std::size_t n = cfg_.max_states;
  const std::size_t nl = cfg_.letters.size();
  std::uint64_t valuation = index & ((std::uint64_t{1} << (n * nl)) - 1);
  std::uint64_t edges = index >> (n * nl);

  ModelBuilder b;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> val;
    for (std::size_t l = 0; l < nl; ++l) {
      if ((valuation >> (s * nl + l)) & 1U) val.push_back(cfg_.letters[l]);
    }
    b.add_state("s" + std::to_string(s + 1), std::move(val));
  }
  for (std::size_t a = 0; a < cfg_.max_actions; ++a) {
    const ActionId act = b.add_action(action_label(a));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t bit = a * n * n + s * n + t;
        if ((edges >> bit) & 1U) b.add_transition(static_cast<StateId>(s), act, static_cast<StateId>(t));
      }
    }
  }
  return std::move(b).build();
}

std::vector<Model> generate(const GenConfig& cfg, std::size_t count) {
  ModelStream stream(cfg);
  std::vector<Model> out;
  out.reserve(count);
  while (out.size() < count) {
    auto m = stream.next();
    if (!m) break;
    out.push_back(std::move(*m));
  }
  return out;
}

std::optional<Countermodel> find_countermodel(const Formula& f, const GenConfig& cfg, std::uint64_t limit) {
  ModelStream stream(cfg);
  const Formula normal = normalize(f);
  for (std::uint64_t i = 0; i < limit; ++i) {
    auto m = stream.next();
    if (!m) break;
    const StateSet truth = ext(*m, normal);
    if (truth.is_full()) continue;
    const StateId state = truth.complement().members().front();

    // Confirm on the model as it will be printed.
    const Model reread = parse_model(print_model(*m));
    if (holds(reread, m->state_name(state), f)) {
      throw std::logic_error("countermodel did not survive re-evaluation");
    }
    return Countermodel{std::move(*m), state, stream.position()};
  }
  return std::nullopt;
}

const std::vector<Schema>& validity_schemas() {
  static const std::vector<Schema> schemas = [] {
    std::vector<Schema> s;
    auto add = [&](const char* name, const char* text) { s.push_back({name, parse_formula(text)}); };
    // Basic validities.
    add("V1-DISTU", "U p & U(p -> q) -> U q");
    add("V2-COMPKh", "Kh(p, r) & Kh(r, q) -> Kh(p, q)");
    add("V3-EMP", "U(p -> q) -> Kh(p, q)");
    add("V4-TU", "U p -> p");
    add("V5-4KU", "Kh(p, q) -> U Kh(p, q)");
    add("V6-5KU", "~Kh(p, q) -> U ~Kh(p, q)");
    // Derived theorems.
    add("TRI", "Kh(p, p)");
    add("WSKh", "U(p -> r) & U(o -> q) & Kh(r, o) -> Kh(p, q)");
    add("4U", "U p -> U U p");
    add("5U", "~U p -> U ~U p");
    add("COND", "Kh(bot, p)");
    add("UCONJ", "U(p & q) <-> U p & U q");
    add("PREKh", "Kh(Kh(p, q) & p, q)");
    add("POSTKh", "Kh(r, Kh(p, q) & p) -> Kh(r, q)");
    return s;
  }();
  return schemas;
}

namespace {

// Calls fn(binding, assignment) for every map from `schema_letters` into
// `targets`, in lexicographic order of target indices.
template <typename Fn>
void for_each_assignment(const std::vector<std::string>& schema_letters, const std::vector<std::string>& targets,
                         Fn&& fn) {
  if (targets.empty() && !schema_letters.empty()) return;
  std::vector<std::size_t> choice(schema_letters.size(), 0);
  while (true) {
    Binding binding;
    std::map<std::string, std::string> assignment;
    for (std::size_t i = 0; i < schema_letters.size(); ++i) {
      binding.emplace(schema_letters[i], Formula::atom(targets[choice[i]]));
      assignment.emplace(schema_letters[i], targets[choice[i]]);
    }
    fn(binding, assignment);
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < targets.size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) return;
  }
}

}  // namespace

AuditReport soundness_audit(const GenConfig& cfg, std::size_t count) {
  AuditReport report;
  ModelStream stream(cfg);

  const std::vector<std::string> pq{"p", "q"};
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  // Arguments for the U cross-check.
  const std::vector<Formula> u_arguments{p, Formula::negation(p), Formula::conjunction(p, q),
                                         Formula::disjunction(p, q), Formula::implication(p, q),
                                         Formula::knows_how(p, q)};

  for (std::size_t i = 0; i < count; ++i) {
    auto next = stream.next();
    if (!next) break;
    const Model& m = *next;
    const std::uint64_t index = stream.position();
    ++report.models;

    auto violation = [&](const std::string& check, const std::map<std::string, std::string>& assignment) {
      report.violations.push_back({index, check, assignment, print_model(m)});
    };

    for (const auto& schema : validity_schemas()) {
      const auto used = letters(schema.formula);
      const std::vector<std::string> schema_letters(used.begin(), used.end());
      for_each_assignment(schema_letters, cfg.letters, [&](const Binding& b, const auto& assignment) {
        ++report.checks;
        if (!ext(m, substitute_all(schema.formula, b)).is_full()) violation(schema.name, assignment);
      });
    }

    for_each_assignment(pq, cfg.letters, [&](const Binding& b, const auto& assignment) {
      for (const auto& arg : u_arguments) {
        ++report.checks;
        const Formula phi = substitute_all(arg, b);
        const StateSet through_kh = ext(m, Formula::universal(phi));
        const bool global = through_kh.empty() || through_kh.is_full();
        if (!global || check_U(m, phi) != through_kh.is_full()) violation("U-universal " + print_formula(arg), assignment);
      }

      ++report.checks;
      const StateSet cond = ext(m, b.at("p"));
      const StateSet goal = ext(m, b.at("q"));
      const bool direct = find_plan(m, cond, goal).found && !cond.is_subset_of(goal);
      const Formula kh_plus = substitute_all(Formula::knows_how_plus(p, q), b);
      if (ext(m, kh_plus).is_full() != direct) {
        violation("Kh+ expansion", assignment);
      }
    });
  }
  return report;
}

}  // namespace khow
