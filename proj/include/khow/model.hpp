#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "khow/state_set.hpp"

namespace khow {

using Transition = std::pair<StateId, StateId>;

/// Finite ability map: states, a finite action alphabet, one transition
/// relation per action, and a valuation. States and actions keep their
/// declaration order, which is the canonical order for all output.
class Model {
 public:
  std::size_t state_count() const { return state_names_.size(); }
  std::size_t action_count() const { return action_names_.size(); }

  const std::string& state_name(StateId s) const { return state_names_[index_of(s)]; }
  const std::string& action_name(ActionId a) const { return action_names_[index_of(a)]; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& action_names() const { return action_names_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;

  /// Pairs of R(a), sorted by (source, target) declaration index.
  const std::vector<Transition>& transitions(ActionId a) const { return relations_[index_of(a)]; }

  /// a-successors of `s` in declaration order.
  std::span<const StateId> successors(StateId s, ActionId a) const;

  /// Letters true at `s`, sorted.
  const std::vector<std::string>& valuation(StateId s) const { return valuation_[index_of(s)]; }

  /// States where `letter` is true.
  StateSet letter_extension(std::string_view letter) const;

  StateSet no_states() const { return StateSet(state_count()); }
  StateSet all_states() const { return StateSet::full(state_count()); }

 private:
  friend class ModelBuilder;
  Model() = default;

  std::vector<std::string> state_names_;
  std::vector<std::string> action_names_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, ActionId> action_index_;
  std::vector<std::vector<Transition>> relations_;
  std::vector<std::vector<std::string>> valuation_;
  // successors_[a][s] lists the a-successors of s.
  std::vector<std::vector<std::vector<StateId>>> successors_;
};

/// Incremental construction with the same validation as the file reader.
/// Errors are ModelError with line 0.
class ModelBuilder {
 public:
  StateId add_state(std::string name, std::vector<std::string> letters = {});
  /// Declares an action, or returns the existing id if already declared.
  ActionId add_action(std::string_view name);
  /// Adds an edge; the action is declared on first use. Duplicate edges are
  /// ignored.
  void add_transition(std::string_view source, std::string_view action, std::string_view target);
  void add_transition(StateId source, ActionId action, StateId target);

  bool has_state(std::string_view name) const { return model_.find_state(name).has_value(); }

  /// Throws ModelError if no state was declared.
  Model build() &&;

 private:
  Model model_;
};

/// Reads the line-based model format:
///
///   # comment
///   state <id> [<letter> ...]
///   action <name>
///   trans <source> <action> <target>
///
/// Throws ModelError carrying the offending line number.
Model parse_model(std::string_view text);

/// Writes `m` in the format read by parse_model, in canonical order.
std::string print_model(const Model& m);

/// { t | s ∈ from, s -a-> t }
StateSet post_image(const Model& m, const StateSet& from, ActionId a);

/// True iff every state of `from` has at least one a-successor.
bool applicable(const Model& m, const StateSet& from, ActionId a);

/// Resolves state names; throws ModelError on an unknown name.
StateSet states_named(const Model& m, std::span<const std::string> names);

}  // namespace khow
