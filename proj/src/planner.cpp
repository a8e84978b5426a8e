#include "khow/planner.hpp"

#include <deque>
#include <unordered_map>

#include "khow/error.hpp"

namespace khow {

std::string to_string(const Plan& plan) {
  if (plan.empty()) return "(epsilon)";
  std::string out;
  for (std::size_t i = 0; i < plan.actions.size(); ++i) {
    if (i) out += ' ';
    out += plan.actions[i];
  }
  return out;
}

PlanCheck verify_plan(const Model& m, const StateSet& starts, const StateSet& goals, const Plan& plan) {
  std::vector<ActionId> steps;
  steps.reserve(plan.size());
  for (const auto& name : plan.actions) {
    auto a = m.find_action(name);
    if (!a) throw ModelError(0, "plan uses undeclared action '" + name + "'");
    steps.push_back(*a);
  }

  const std::size_t n = m.state_count();
  for (std::size_t si = 0; si < n; ++si) {
    const auto start = static_cast<StateId>(si);
    if (!starts.contains(start)) continue;

    // reached[t] <=> start -σ_k-> t
    std::vector<bool> reached(n, false);
    reached[si] = true;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& pairs = m.transitions(steps[k]);
      std::vector<bool> next(n, false);
      for (std::size_t t = 0; t < n; ++t) {
        if (!reached[t]) continue;
        bool has_successor = false;
        for (const auto& [src, dst] : pairs) {
          if (index_of(src) == t) {
            has_successor = true;
            next[index_of(dst)] = true;
          }
        }
        if (!has_successor) {
          PlanCheck c;
          c.failure = PlanCheck::Failure::Stuck;
          c.step = k + 1;
          c.state = static_cast<StateId>(t);
          c.start = start;
          c.reason = "step " + std::to_string(k + 1) + " (" + plan.actions[k] + "): state " + m.state_names()[t] +
                     " has no " + plan.actions[k] + "-successor (reachable from " + m.state_name(start) + ")";
          return c;
        }
      }
      reached = std::move(next);
    }

    for (std::size_t t = 0; t < n; ++t) {
      if (reached[t] && !goals.contains(static_cast<StateId>(t))) {
        PlanCheck c;
        c.failure = PlanCheck::Failure::BadEndpoint;
        c.step = steps.size();
        c.state = static_cast<StateId>(t);
        c.start = start;
        c.reason = "endpoint " + m.state_names()[t] + " (reached from " + m.state_name(start) + " by " +
                   to_string(plan) + ") is not a goal state";
        return c;
      }
    }
  }
  return {};
}

PlanResult find_plan(const Model& m, const StateSet& starts, const StateSet& goals) {
  struct Node {
    BeliefState belief;
    std::size_t parent;
    ActionId via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  std::unordered_map<BeliefState, std::size_t, StateSetHash> seen;
  std::deque<std::size_t> queue;

  nodes.push_back({starts, kRoot, ActionId{}});
  seen.emplace(starts, 0);
  queue.push_back(0);

  PlanResult result;
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    ++result.explored;

    if (nodes[current].belief.is_subset_of(goals)) {
      std::vector<std::string> reversed;
      for (std::size_t i = current; nodes[i].parent != kRoot; i = nodes[i].parent) {
        reversed.push_back(m.action_name(nodes[i].via));
      }
      result.found = true;
      result.witness = Plan{{reversed.rbegin(), reversed.rend()}};
      return result;
    }

    // Copy: push_back below may reallocate `nodes`.
    const BeliefState belief = nodes[current].belief;
    for (std::size_t ai = 0; ai < m.action_count(); ++ai) {
      const auto a = static_cast<ActionId>(ai);
      if (!applicable(m, belief, a)) continue;
      BeliefState next = post_image(m, belief, a);
      if (seen.contains(next)) continue;
      seen.emplace(next, nodes.size());
      nodes.push_back({std::move(next), current, a});
      queue.push_back(nodes.size() - 1);
    }
  }
  return result;
}

}  // namespace khow
