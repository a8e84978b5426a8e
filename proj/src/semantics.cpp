#include "khow/semantics.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "khow/error.hpp"
#include "khow/planner.hpp"

namespace khow {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Model& m) : model_(m) {}

  StateSet eval(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    StateSet out = compute(f);
    memo_.emplace(f, out);
    return out;
  }

 private:
  StateSet compute(const Formula& f) {
    switch (f.op()) {
      case Op::Top:
        return model_.all_states();
      case Op::Atom:
        return model_.letter_extension(f.name());
      case Op::Not:
        return eval(f.lhs()).complement();
      case Op::And:
        return eval(f.lhs()) & eval(f.rhs());
      case Op::Kh: {
        const StateSet cond = eval(f.lhs());
        const StateSet goal = eval(f.rhs());
        return find_plan(model_, cond, goal).found ? model_.all_states() : model_.no_states();
      }
      default:
        throw std::logic_error("evaluator reached a non-normal formula");
    }
  }

  const Model& model_;
  std::unordered_map<Formula, StateSet, FormulaHash> memo_;
};

}  // namespace

Extension extension(const Model& m, const Formula& f) {
  Formula n = normalize(f);
  StateSet truth = Evaluator(m).eval(n);
  return {std::move(n), std::move(truth)};
}

StateSet ext(const Model& m, const Formula& f) { return extension(m, f).truth_set; }

bool holds(const Model& m, std::string_view state, const Formula& f) {
  auto s = m.find_state(state);
  if (!s) throw ModelError(0, "unknown state '" + std::string(state) + "'");
  return ext(m, f).contains(*s);
}

bool check_U(const Model& m, const Formula& f) { return ext(m, f).is_full(); }

bool is_global(const Formula& f) {
  switch (f.op()) {
    case Op::Kh:
    case Op::KhPlus:
    case Op::Univ:
      return true;
    default:
      return false;
  }
}

}  // namespace khow
