#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "khow/formula.hpp"

namespace khow {

// ---------------------------------------------------------------------------
// Propositional layer

/// Largest number of propositional variables the truth-table check accepts.
inline constexpr std::size_t kTautologyBudget = 20;

/// Decides whether `f` is an instance of a propositional tautology. After
/// normalization every Kh-rooted subformula is treated as an opaque variable
/// (identical subformulas share a variable) and the result is decided by
/// truth table. Throws TautologyBudgetError above kTautologyBudget variables.
bool is_tautology(const Formula& f);

// ---------------------------------------------------------------------------
// Axioms

/// Names recognised in `Axiom` justifications.
const std::vector<std::string>& axiom_names();

/// The schema for an axiom name, over the schema letters p, q and r; nullopt
/// for an unknown name.
std::optional<Formula> axiom_schema(std::string_view name);

using Binding = std::map<std::string, Formula, std::less<>>;

// ---------------------------------------------------------------------------
// Proofs

namespace just {

struct Taut {};
struct Axiom {
  std::string name;
  Binding binding;
};
/// From line `premise` (φ) and line `implication` (φ → ψ) infer ψ.
struct ModusPonens {
  std::size_t premise;
  std::size_t implication;
};
/// From line `source` (φ) infer Uφ.
struct NecU {
  std::size_t source;
};
/// From line `source` infer it with `letter` uniformly replaced.
struct Sub {
  std::size_t source;
  std::string letter;
  Formula replacement;
};
/// The `index`-th (1-based) hypothesis; only valid under check_proof_under.
struct Hyp {
  std::size_t index;
};

}  // namespace just

using Justification = std::variant<just::Taut, just::Axiom, just::ModusPonens, just::NecU, just::Sub, just::Hyp>;

struct ProofLine {
  std::size_t index;
  Formula formula;
  Justification justification;
};

struct Proof {
  std::vector<ProofLine> lines;
};

struct Verdict {
  bool accepted = false;
  /// Offending line (1-based); 0 when the proof as a whole is at fault.
  std::size_t line = 0;
  std::string reason;

  explicit operator bool() const { return accepted; }
};

/// Checks a derivation in the system with axioms TAUT, DISTU, COMPKh, EMP, TU,
/// 4KU, 5KU and rules MP, NECU, SUB. Formulas are compared after
/// normalization, so U-lines and their Kh(¬φ, ⊥) spellings unify. An empty
/// proof is rejected.
Verdict check_proof(const Proof& proof);

/// As check_proof, but lines may also cite the given hypotheses.
Verdict check_proof_under(const Proof& proof, std::span<const Formula> hypotheses);

// ---------------------------------------------------------------------------
// Proof files

/// A parsed proof file: `assume <formula>` lines declare hypotheses (numbered
/// from 1 in file order), numbered lines form the derivation.
struct ProofDocument {
  std::vector<Formula> hypotheses;
  Proof proof;
};

/// Reads
///
///   # comment
///   assume <formula>
///   <n>. <formula> ; <justification>
///
/// where <justification> is one of `taut`, `axiom <NAME> p=<f> q=<f> [r=<f>]`,
/// `mp <i> <j>`, `necu <i>`, `sub <i> <letter> <f>`, `hyp <h>`.
/// Throws ProofSyntaxError.
ProofDocument parse_proof(std::string_view text);

/// Inverse of parse_proof.
std::string print_proof(const ProofDocument& doc);

Verdict check(const ProofDocument& doc);

// ---------------------------------------------------------------------------
// Bundled derivations

struct Theorem {
  std::string name;
  Formula formula;
  Proof proof;
};

/// Machine-checkable derivations of TRI, WSKh, 4U, 5U, COND, UCONJ, PREKh and
/// POSTKh, followed by one instance of the admissible rule NECKh.
std::vector<Theorem> theorem_db();

/// Replacement of equivalents in the condition of Kh: from the hypothesis
/// psi <-> phi derive Kh(psi, chi) <-> Kh(phi, chi).
ProofDocument replacement_derivation();

}  // namespace khow
