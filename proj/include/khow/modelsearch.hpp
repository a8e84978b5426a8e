#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "khow/formula.hpp"
#include "khow/model.hpp"

namespace khow {

enum class GenMode { Random, Exhaustive };

struct GenConfig {
  std::size_t max_states = 4;
  std::size_t max_actions = 2;
  std::vector<std::string> letters;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Random;

  /// Throws ConfigError when a bound is zero, a letter is invalid, or an
  /// exhaustive request exceeds 4 states / 2 actions.
  void validate() const;
};

/// Number of structures the exhaustive enumerator emits for `cfg`:
/// 2^(k·n²) edge sets times 2^(n·|letters|) valuations, with n = max_states
/// and k = max_actions.
std::uint64_t exhaustive_model_count(const GenConfig& cfg);

/// Deterministic stream of models.
///
/// Random mode draws the state count uniformly from [1, max_states], declares
/// max_actions actions, and includes each labelled edge and each (state,
/// letter) pair independently with probability 1/2.
///
/// Exhaustive mode visits every model with exactly max_states states and
/// max_actions actions. Model number i uses the low n·|letters| bits of i for
/// the valuation and the remaining bits for the edge set, so valuations vary
/// fastest. No isomorphism reduction is done.
///
/// States are named s1..sn and actions a, b, c, ...
class ModelStream {
 public:
  explicit ModelStream(GenConfig cfg);

  /// Next model, or nullopt once the exhaustive space is used up.
  std::optional<Model> next();

  /// Position of the model most recently returned by next() (0-based).
  std::uint64_t position() const { return produced_ - 1; }

 private:
  Model random_model();
  Model enumerated_model(std::uint64_t index) const;

  GenConfig cfg_;
  std::mt19937_64 rng_;
  std::uint64_t produced_ = 0;
  std::uint64_t total_ = 0;
};

/// First `count` models of the stream for `cfg`.
std::vector<Model> generate(const GenConfig& cfg, std::size_t count);

struct Countermodel {
  Model model;
  StateId state;
  /// Position of the model in the stream.
  std::uint64_t index;
};

/// Scans at most `limit` models of the stream for one where `f` fails at some
/// state; returns the first such model and its first falsifying state. The
/// result is re-checked on a reparsed copy of the printed model before it is
/// returned.
std::optional<Countermodel> find_countermodel(const Formula& f, const GenConfig& cfg, std::uint64_t limit);

/// Named formulas that must be true at every state of every model.
struct Schema {
  std::string name;
  Formula formula;
};

/// The six basic validities (DISTU, COMPKh, EMP, TU, 4KU, 5KU in their
/// semantic form) and the eight derived theorems, over the letters p, q, r, o.
const std::vector<Schema>& validity_schemas();

struct AuditViolation {
  std::uint64_t model_index;
  std::string check;
  /// Schema letter -> letter of the model it was mapped to.
  std::map<std::string, std::string> assignment;
  std::string model_text;
};

struct AuditReport {
  std::size_t models = 0;
  std::size_t checks = 0;
  std::vector<AuditViolation> violations;
};

/// For each of the first `count` models and every assignment of cfg.letters
/// to the schema letters, evaluates validity_schemas() plus two
/// cross-checks: U φ computed through its Kh encoding against the direct
/// universal check, and Kh⁺(ψ, φ) against "a plan exists but the empty plan
/// does not do".
AuditReport soundness_audit(const GenConfig& cfg, std::size_t count);

}  // namespace khow
