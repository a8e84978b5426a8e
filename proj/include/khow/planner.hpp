#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "khow/model.hpp"
#include "khow/state_set.hpp"

namespace khow {

/// A linear plan: a finite sequence of action names. Empty means ε.
struct Plan {
  std::vector<std::string> actions;

  bool empty() const { return actions.empty(); }
  std::size_t size() const { return actions.size(); }
  friend bool operator==(const Plan&, const Plan&) = default;
};

/// "a b c", or "(epsilon)" for the empty plan.
std::string to_string(const Plan& plan);

struct PlanCheck {
  enum class Failure {
    None,
    /// A state reached by a proper prefix has no successor for the next action.
    Stuck,
    /// A state reached by the whole plan is not a goal state.
    BadEndpoint,
  };

  Failure failure = Failure::None;
  /// 1-based position of the action that cannot be taken (Stuck only).
  std::size_t step = 0;
  /// Offending state, and the start state it was reached from.
  std::optional<StateId> state;
  std::optional<StateId> start;
  std::string reason;

  bool ok() const { return failure == Failure::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks `plan` directly against the definition: from every start state the
/// plan is strongly executable and every state it can end in is a goal.
/// Start states are examined in declaration order and the first violation is
/// reported. Throws ModelError if the plan names an undeclared action.
///
/// This is deliberately a separate, literal implementation (per-start
/// traversal over the raw pair lists) so that it can serve as an oracle for
/// find_plan.
PlanCheck verify_plan(const Model& m, const StateSet& starts, const StateSet& goals, const Plan& plan);

struct PlanResult {
  bool found = false;
  /// Present iff found.
  std::optional<Plan> witness;
  /// Number of belief states taken off the search queue.
  std::size_t explored = 0;
};

/// Decides whether one plan works from all of `starts` to `goals` by
/// breadth-first search over belief states. See docs/planner.md for why
/// this is exact. The witness is a shortest plan and, among those, the first
/// in action-declaration order.
PlanResult find_plan(const Model& m, const StateSet& starts, const StateSet& goals);

}  // namespace khow
