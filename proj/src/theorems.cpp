// Bundled derivations. Each proof is assembled line by line with a small
// builder; the builder only records lines; check_proof re-validates every step
// from scratch.

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "khow/proof.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

class ProofBuilder {
 public:
  std::size_t taut(std::string_view text) { return add(parse_formula(text), just::Taut{}); }

  std::size_t hyp(std::size_t h, std::string_view text) { return add(parse_formula(text), just::Hyp{h}); }

  /// Axiom instance, written out as the instantiated schema.
  std::size_t axiom(const char* name, std::initializer_list<std::pair<const char*, const char*>> binding) {
    just::Axiom ax{name, make_binding(binding)};
    Formula f = substitute_all(*axiom_schema(name), ax.binding);
    return add(std::move(f), std::move(ax));
  }

  /// Axiom instance displayed in a different but definitionally equal spelling.
  std::size_t axiom_as(const char* name, std::initializer_list<std::pair<const char*, const char*>> binding,
                       std::string_view display) {
    return add(parse_formula(display), just::Axiom{name, make_binding(binding)});
  }

  std::size_t necu(std::size_t source) { return add(Formula::universal(at(source)), just::NecU{source}); }

  std::size_t mp(std::size_t premise, std::size_t implication) {
    const Formula& imp = at(implication);
    if (imp.op() != Op::Implies) throw std::logic_error("mp: not an implication");
    return add(imp.rhs(), just::ModusPonens{premise, implication});
  }

  std::size_t sub(std::size_t source, const char* letter, std::string_view replacement) {
    Formula r = parse_formula(replacement);
    Formula f = substitute(at(source), letter, r);
    return add(std::move(f), just::Sub{source, letter, std::move(r)});
  }

  /// From lines P1..Pn conclude `goal`: one tautology P1 -> (P2 -> ... ->
  /// goal) followed by n applications of MP.
  std::size_t chain(std::initializer_list<std::size_t> premises, std::string_view goal) {
    Formula f = parse_formula(goal);
    std::vector<std::size_t> ps(premises);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) f = Formula::implication(at(*it), f);
    std::size_t line = add(std::move(f), just::Taut{});
    for (std::size_t p : ps) line = mp(p, line);
    return line;
  }

  Proof take() && { return std::move(proof_); }

 private:
  static Binding make_binding(std::initializer_list<std::pair<const char*, const char*>> binding) {
    Binding b;
    for (const auto& [letter, text] : binding) b.emplace(letter, parse_formula(text));
    return b;
  }

  const Formula& at(std::size_t line) const { return proof_.lines.at(line - 1).formula; }

  std::size_t add(Formula f, Justification j) {
    const std::size_t index = proof_.lines.size() + 1;
    proof_.lines.push_back({index, std::move(f), std::move(j)});
    return index;
  }

  Proof proof_;
};

// Kh(p, p)
std::size_t derive_tri(ProofBuilder& b) {
  const auto t = b.taut("p -> p");
  const auto u = b.necu(t);
  const auto emp = b.axiom("EMP", {{"p", "p"}, {"q", "p"}});
  return b.mp(u, emp);
}

// Kh(Kh(p, q) & p, q), by cases on Kh(p, q).
std::size_t derive_prekh(ProofBuilder& b) {
  // Case Kh(p, q): Kh(A, p) by EMP, then compose with Kh(p, q).
  const auto weaken = b.taut("Kh(p, q) & p -> p");
  const auto u_weaken = b.necu(weaken);
  const auto emp = b.axiom("EMP", {{"p", "Kh(p, q) & p"}, {"q", "p"}});
  const auto kh_a_p = b.mp(u_weaken, emp);
  const auto comp_pos = b.axiom("COMPKh", {{"p", "Kh(p, q) & p"}, {"r", "p"}, {"q", "q"}});

  // Case ~Kh(p, q): U ~Kh(p, q), hence no A-state at all, hence Kh(A, bot);
  // compose with COND.
  const auto five = b.axiom("5KU", {{"p", "p"}, {"q", "q"}});
  const auto vacuous = b.taut("~Kh(p, q) -> (Kh(p, q) & p -> bot)");
  const auto u_vacuous = b.necu(vacuous);
  const auto dist = b.axiom("DISTU", {{"p", "~Kh(p, q)"}, {"q", "Kh(p, q) & p -> bot"}});
  const auto emp_bot = b.axiom("EMP", {{"p", "Kh(p, q) & p"}, {"q", "bot"}});
  const auto ex_falso = b.taut("bot -> q");
  const auto u_ex_falso = b.necu(ex_falso);
  const auto emp_cond = b.axiom("EMP", {{"p", "bot"}, {"q", "q"}});
  const auto cond = b.mp(u_ex_falso, emp_cond);
  const auto comp_neg = b.axiom("COMPKh", {{"p", "Kh(p, q) & p"}, {"r", "bot"}, {"q", "q"}});

  return b.chain({kh_a_p, comp_pos, five, u_vacuous, dist, emp_bot, cond, comp_neg}, "Kh(Kh(p, q) & p, q)");
}

Proof tri() {
  ProofBuilder b;
  derive_tri(b);
  return std::move(b).take();
}

Proof wskh() {
  ProofBuilder b;
  const auto emp_pre = b.axiom("EMP", {{"p", "p"}, {"q", "r"}});
  const auto emp_post = b.axiom("EMP", {{"p", "o"}, {"q", "q"}});
  const auto comp1 = b.axiom("COMPKh", {{"p", "p"}, {"r", "r"}, {"q", "o"}});
  const auto comp2 = b.axiom("COMPKh", {{"p", "p"}, {"r", "o"}, {"q", "q"}});
  b.chain({emp_pre, emp_post, comp1, comp2}, "U(p -> r) & U(o -> q) & Kh(r, o) -> Kh(p, q)");
  return std::move(b).take();
}

Proof four_u() {
  ProofBuilder b;
  b.axiom_as("4KU", {{"p", "~p"}, {"q", "bot"}}, "U p -> U U p");
  return std::move(b).take();
}

Proof five_u() {
  ProofBuilder b;
  b.axiom_as("5KU", {{"p", "~p"}, {"q", "bot"}}, "~U p -> U ~U p");
  return std::move(b).take();
}

Proof cond() {
  ProofBuilder b;
  const auto t = b.taut("bot -> p");
  const auto u = b.necu(t);
  const auto emp = b.axiom("EMP", {{"p", "bot"}, {"q", "p"}});
  b.mp(u, emp);
  return std::move(b).take();
}

Proof uconj() {
  ProofBuilder b;
  // U(p & q) -> U p and U(p & q) -> U q
  const auto left = b.taut("p & q -> p");
  const auto u_left = b.necu(left);
  const auto dist_left = b.axiom("DISTU", {{"p", "p & q"}, {"q", "p"}});
  const auto right = b.taut("p & q -> q");
  const auto u_right = b.necu(right);
  const auto dist_right = b.axiom("DISTU", {{"p", "p & q"}, {"q", "q"}});
  // U p & U q -> U(p & q)
  const auto pair = b.taut("p -> (q -> p & q)");
  const auto u_pair = b.necu(pair);
  const auto dist_pair1 = b.axiom("DISTU", {{"p", "p"}, {"q", "q -> p & q"}});
  const auto dist_pair2 = b.axiom("DISTU", {{"p", "q"}, {"q", "p & q"}});
  b.chain({u_left, dist_left, u_right, dist_right, u_pair, dist_pair1, dist_pair2}, "U(p & q) <-> U p & U q");
  return std::move(b).take();
}

Proof prekh() {
  ProofBuilder b;
  derive_prekh(b);
  return std::move(b).take();
}

Proof postkh() {
  ProofBuilder b;
  const auto pre = derive_prekh(b);
  const auto comp = b.axiom("COMPKh", {{"p", "r"}, {"r", "Kh(p, q) & p"}, {"q", "q"}});
  b.chain({pre, comp}, "Kh(r, Kh(p, q) & p) -> Kh(r, q)");
  return std::move(b).take();
}

// From the theorem Kh(p, p) obtain Kh(q, Kh(p, p)).
Proof neckh_instance() {
  ProofBuilder b;
  const auto thm = derive_tri(b);
  const auto weaken = b.taut("Kh(p, p) -> (q -> Kh(p, p))");
  const auto imp = b.mp(thm, weaken);
  const auto u = b.necu(imp);
  const auto emp = b.axiom("EMP", {{"p", "q"}, {"q", "Kh(p, p)"}});
  b.mp(u, emp);
  return std::move(b).take();
}

}  // namespace

std::vector<Theorem> theorem_db() {
  std::vector<Theorem> db;
  auto add = [&](const char* name, const char* formula, Proof proof) {
    db.push_back({name, parse_formula(formula), std::move(proof)});
  };
  add("TRI", "Kh(p, p)", tri());
  add("WSKh", "U(p -> r) & U(o -> q) & Kh(r, o) -> Kh(p, q)", wskh());
  add("4U", "U p -> U U p", four_u());
  add("5U", "~U p -> U ~U p", five_u());
  add("COND", "Kh(bot, p)", cond());
  add("UCONJ", "U(p & q) <-> U p & U q", uconj());
  add("PREKh", "Kh(Kh(p, q) & p, q)", prekh());
  add("POSTKh", "Kh(r, Kh(p, q) & p) -> Kh(r, q)", postkh());
  add("NECKh", "Kh(q, Kh(p, p))", neckh_instance());
  return db;
}

ProofDocument replacement_derivation() {
  ProofBuilder b;
  const auto h = b.hyp(1, "psi <-> phi");

  // Kh(psi, chi) -> Kh(phi, chi)
  const auto back = b.taut("(psi <-> phi) -> (phi -> psi)");
  const auto phi_psi = b.mp(h, back);
  const auto u_phi_psi = b.necu(phi_psi);
  const auto emp1 = b.axiom("EMP", {{"p", "phi"}, {"q", "psi"}});
  const auto kh_phi_psi = b.mp(u_phi_psi, emp1);
  const auto w1 = b.taut("Kh(phi, psi) -> (Kh(psi, chi) -> Kh(phi, psi))");
  const auto s1 = b.mp(kh_phi_psi, w1);
  const auto w2 = b.taut("(Kh(psi, chi) -> Kh(phi, psi)) -> (Kh(psi, chi) -> Kh(phi, psi) & Kh(psi, chi))");
  const auto s2 = b.mp(s1, w2);
  const auto comp = b.axiom("COMPKh", {{"p", "p"}, {"q", "q"}, {"r", "r"}});
  const auto c1 = b.sub(comp, "p", "phi");
  const auto c2 = b.sub(c1, "r", "psi");
  const auto c3 = b.sub(c2, "q", "chi");
  const auto forward = b.chain({s2, c3}, "Kh(psi, chi) -> Kh(phi, chi)");

  // The symmetric half: Kh(phi, chi) -> Kh(psi, chi)
  const auto fwd = b.taut("(psi <-> phi) -> (psi -> phi)");
  const auto psi_phi = b.mp(h, fwd);
  const auto u_psi_phi = b.necu(psi_phi);
  const auto emp2 = b.axiom("EMP", {{"p", "psi"}, {"q", "phi"}});
  const auto kh_psi_phi = b.mp(u_psi_phi, emp2);
  const auto w3 = b.taut("Kh(psi, phi) -> (Kh(phi, chi) -> Kh(psi, phi))");
  const auto s3 = b.mp(kh_psi_phi, w3);
  const auto w4 = b.taut("(Kh(phi, chi) -> Kh(psi, phi)) -> (Kh(phi, chi) -> Kh(psi, phi) & Kh(phi, chi))");
  const auto s4 = b.mp(s3, w4);
  const auto comp2 = b.axiom("COMPKh", {{"p", "psi"}, {"r", "phi"}, {"q", "chi"}});
  const auto backward = b.chain({s4, comp2}, "Kh(phi, chi) -> Kh(psi, chi)");

  b.chain({forward, backward}, "Kh(psi, chi) <-> Kh(phi, chi)");
  return {{parse_formula("psi <-> phi")}, std::move(b).take()};
}

}  // namespace khow
