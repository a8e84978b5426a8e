#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace khow {

/// Formula constructors. The first five are the core language; the rest are
/// abbreviations kept in the tree so formulas print the way they were written.
enum class Op : std::uint8_t {
  Top,
  Atom,
  Not,
  And,
  Kh,
  // sugar
  Bot,
  Or,
  Implies,
  Iff,
  Univ,    // U φ  :=  Kh(¬φ, ⊥)
  KhPlus,  // Kh⁺(ψ, φ)  :=  Kh(ψ, φ) ∧ ¬U(ψ → φ)
};

bool is_core(Op op);
int arity(Op op);

/// Immutable, structurally shared formula tree. Copies are cheap; equality is
/// structural (sugar is significant: `p | q` and `~(~p & ~q)` differ).
class Formula {
 public:
  static Formula top();
  static Formula bot();
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula universal(Formula child);
  static Formula knows_how(Formula condition, Formula goal);
  static Formula knows_how_plus(Formula condition, Formula goal);

  /// Rebuilds an inner node of kind `op` over new children (generic
  /// traversals). Not/Univ take one child, the binary operators two.
  static Formula make(Op op, const Formula& lhs, const Formula& rhs);
  static Formula make(Op op, const Formula& child);

  Op op() const;
  /// Letter of an Atom; empty for every other node.
  const std::string& name() const;
  /// First child (the only one for Not/Univ; the condition for Kh/KhPlus).
  const Formula& lhs() const;
  /// Second child (the goal for Kh/KhPlus).
  const Formula& rhs() const;

  std::size_t hash() const;
  /// Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t hash;
  std::size_t size;
};

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->lhs; }
inline const Formula& Formula::rhs() const { return node_->rhs; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Rewrites all abbreviations into Top/Atom/Not/And/Kh.
Formula normalize(const Formula& f);

/// True when `f` uses core constructors only.
bool is_normal(const Formula& f);

/// Uniformly replaces every occurrence of the letter `letter` by `replacement`.
Formula substitute(const Formula& f, std::string_view letter, const Formula& replacement);

/// Simultaneous substitution of several letters.
Formula substitute_all(const Formula& f, const std::map<std::string, Formula, std::less<>>& binding);

/// Set of proposition letters occurring in `f`.
std::set<std::string> letters(const Formula& f);

/// Nesting depth of `f` (a leaf has depth 1).
std::size_t depth(const Formula& f);

}  // namespace khow

template <>
struct std::hash<khow::Formula> {
  std::size_t operator()(const khow::Formula& f) const noexcept { return f.hash(); }
};
