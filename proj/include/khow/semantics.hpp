#pragma once

#include <string_view>

#include "khow/formula.hpp"
#include "khow/model.hpp"
#include "khow/state_set.hpp"

namespace khow {

/// Truth set of a formula in a model, alongside the normalized formula it was
/// computed for.
struct Extension {
  Formula formula;
  StateSet truth_set;
};

/// Evaluates bottom-up over whole state sets. Every Kh subformula costs one
/// planner call; its extension is either empty or all of S.
Extension extension(const Model& m, const Formula& f);

/// Shorthand for extension(m, f).truth_set.
StateSet ext(const Model& m, const Formula& f);

/// m, s ⊨ f. Throws ModelError for an unknown state.
bool holds(const Model& m, std::string_view state, const Formula& f);

/// Universal modality evaluated directly: f is true at every state. Agrees
/// with the Kh(¬f, ⊥) encoding by construction of the logic; the test suite
/// checks that it does.
bool check_U(const Model& m, const Formula& f);

/// True when the truth value of `f` cannot depend on the evaluation state
/// because its root is Kh, U or Kh⁺.
bool is_global(const Formula& f);

}  // namespace khow
