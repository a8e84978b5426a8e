#include "khow/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace khow {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_core(Op op) {
  switch (op) {
    case Op::Top:
    case Op::Atom:
    case Op::Not:
    case Op::And:
    case Op::Kh:
      return true;
    default:
      return false;
  }
}

int arity(Op op) {
  switch (op) {
    case Op::Top:
    case Op::Bot:
    case Op::Atom:
      return 0;
    case Op::Not:
    case Op::Univ:
      return 1;
    default:
      return 2;
  }
}

Formula Formula::top() {
  static const Formula instance{std::make_shared<const Node>(Node{Op::Top, {}, {}, {}, mix(0, 1), 1})};
  return instance;
}

Formula Formula::bot() {
  static const Formula instance{std::make_shared<const Node>(Node{Op::Bot, {}, {}, {}, mix(0, 2), 1})};
  return instance;
}

Formula Formula::atom(std::string name) {
  const std::size_t h = mix(static_cast<std::size_t>(Op::Atom), std::hash<std::string>{}(name));
  return Formula{std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, {}, h, 1})};
}

Formula Formula::make(Op op, const Formula& child) {
  const std::size_t h = mix(mix(static_cast<std::size_t>(op) * 31, child.hash()), 0);
  return Formula{std::make_shared<const Node>(Node{op, {}, child, {}, h, child.size() + 1})};
}

Formula Formula::make(Op op, const Formula& lhs, const Formula& rhs) {
  if (arity(op) == 1) return make(op, lhs);
  const std::size_t h = mix(mix(static_cast<std::size_t>(op) * 31, lhs.hash()), rhs.hash());
  return Formula{std::make_shared<const Node>(Node{op, {}, lhs, rhs, h, lhs.size() + rhs.size() + 1})};
}

Formula Formula::negation(Formula child) { return make(Op::Not, child); }
Formula Formula::conjunction(Formula lhs, Formula rhs) { return make(Op::And, lhs, rhs); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return make(Op::Or, lhs, rhs); }
Formula Formula::implication(Formula lhs, Formula rhs) { return make(Op::Implies, lhs, rhs); }
Formula Formula::equivalence(Formula lhs, Formula rhs) { return make(Op::Iff, lhs, rhs); }
Formula Formula::universal(Formula child) { return make(Op::Univ, child); }
Formula Formula::knows_how(Formula condition, Formula goal) { return make(Op::Kh, condition, goal); }
Formula Formula::knows_how_plus(Formula condition, Formula goal) { return make(Op::KhPlus, condition, goal); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
  switch (arity(a.op())) {
    case 0:
      return a.name() == b.name();
    case 1:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

class Normalizer {
 public:
  Formula run(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Formula out = rewrite(f);
    memo_.emplace(f, out);
    return out;
  }

 private:
  static Formula neg(const Formula& f) { return Formula::negation(f); }
  static Formula conj(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
  // a -> b  ==>  ~(a & ~b), on already-normal arguments
  static Formula imp(const Formula& a, const Formula& b) { return neg(conj(a, neg(b))); }
  static Formula falsum() { return neg(Formula::top()); }
  static Formula univ(const Formula& a) { return Formula::knows_how(neg(a), falsum()); }

  Formula rewrite(const Formula& f) {
    switch (f.op()) {
      case Op::Top:
      case Op::Atom:
        return f;
      case Op::Bot:
        return falsum();
      case Op::Not:
        return neg(run(f.lhs()));
      case Op::And:
        return conj(run(f.lhs()), run(f.rhs()));
      case Op::Kh:
        return Formula::knows_how(run(f.lhs()), run(f.rhs()));
      case Op::Or:
        return neg(conj(neg(run(f.lhs())), neg(run(f.rhs()))));
      case Op::Implies:
        return imp(run(f.lhs()), run(f.rhs()));
      case Op::Iff: {
        Formula a = run(f.lhs());
        Formula b = run(f.rhs());
        return conj(imp(a, b), imp(b, a));
      }
      case Op::Univ:
        return univ(run(f.lhs()));
      case Op::KhPlus: {
        Formula a = run(f.lhs());
        Formula b = run(f.rhs());
        return conj(Formula::knows_how(a, b), neg(univ(imp(a, b))));
      }
    }
    return f;
  }

  std::unordered_map<Formula, Formula, FormulaHash> memo_;
};

template <typename LeafFn>
class Rewriter {
 public:
  explicit Rewriter(LeafFn leaf) : leaf_(std::move(leaf)) {}

  Formula run(const Formula& f) {
    if (f.op() == Op::Atom) return leaf_(f);
    const int n = arity(f.op());
    if (n == 0) return f;
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Formula out = n == 1 ? rebuild1(f) : rebuild2(f);
    memo_.emplace(f, out);
    return out;
  }

 private:
  Formula rebuild1(const Formula& f) {
    Formula c = run(f.lhs());
    return c == f.lhs() ? f : Formula::make(f.op(), c);
  }
  Formula rebuild2(const Formula& f) {
    Formula l = run(f.lhs());
    Formula r = run(f.rhs());
    return (l == f.lhs() && r == f.rhs()) ? f : Formula::make(f.op(), l, r);
  }

  LeafFn leaf_;
  std::unordered_map<Formula, Formula, FormulaHash> memo_;
};

}  // namespace

Formula normalize(const Formula& f) { return Normalizer{}.run(f); }

bool is_normal(const Formula& f) {
  if (!is_core(f.op())) return false;
  switch (arity(f.op())) {
    case 0:
      return true;
    case 1:
      return is_normal(f.lhs());
    default:
      return is_normal(f.lhs()) && is_normal(f.rhs());
  }
}

Formula substitute(const Formula& f, std::string_view letter, const Formula& replacement) {
  Rewriter rw{[&](const Formula& a) { return a.name() == letter ? replacement : a; }};
  return rw.run(f);
}

Formula substitute_all(const Formula& f, const std::map<std::string, Formula, std::less<>>& binding) {
  Rewriter rw{[&](const Formula& a) {
    auto it = binding.find(a.name());
    return it == binding.end() ? a : it->second;
  }};
  return rw.run(f);
}

namespace {

void collect_letters(const Formula& f, std::set<std::string>& out) {
  switch (arity(f.op())) {
    case 0:
      if (f.op() == Op::Atom) out.insert(f.name());
      return;
    case 1:
      collect_letters(f.lhs(), out);
      return;
    default:
      collect_letters(f.lhs(), out);
      collect_letters(f.rhs(), out);
  }
}

}  // namespace

std::set<std::string> letters(const Formula& f) {
  std::set<std::string> out;
  collect_letters(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  switch (arity(f.op())) {
    case 0:
      return 1;
    case 1:
      return depth(f.lhs()) + 1;
    default:
      return std::max(depth(f.lhs()), depth(f.rhs())) + 1;
  }
}

}  // namespace khow
