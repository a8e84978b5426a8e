#include "khow/proof.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "khow/error.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

struct Schema {
  std::string name;
  Formula formula;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = [] {
    std::vector<Schema> t;
    auto add = [&](const char* name, const char* text) { t.push_back({name, parse_formula(text)}); };
    add("DISTU", "U p & U(p -> q) -> U q");
    add("COMPKh", "Kh(p, r) & Kh(r, q) -> Kh(p, q)");
    add("EMP", "U(p -> q) -> Kh(p, q)");
    add("TU", "U p -> p");
    add("4KU", "Kh(p, q) -> U Kh(p, q)");
    add("5KU", "~Kh(p, q) -> U ~Kh(p, q)");
    return t;
  }();
  return table;
}

Verdict reject(std::size_t line, std::string reason) { return {false, line, std::move(reason)}; }

class Checker {
 public:
  Checker(const Proof& proof, std::span<const Formula> hypotheses) : proof_(proof), hypotheses_(hypotheses) {}

  Verdict run() {
    if (proof_.lines.empty()) return reject(0, "empty proof has no conclusion");
    for (std::size_t i = 0; i < proof_.lines.size(); ++i) {
      const ProofLine& line = proof_.lines[i];
      if (line.index != i + 1) {
        return reject(line.index, "expected line number " + std::to_string(i + 1));
      }
      normal_.push_back(normalize(line.formula));
      if (auto why = check_line(line); !why.empty()) return reject(line.index, std::move(why));
    }
    return {true, 0, {}};
  }

 private:
  // Empty string means the line is justified.
  std::string check_line(const ProofLine& line) {
    const Formula& here = normal_.back();
    return std::visit(
        [&](const auto& j) -> std::string {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, just::Taut>) {
            try {
              return is_tautology(line.formula) ? "" : "not a propositional tautology";
            } catch (const TautologyBudgetError& e) {
              return e.what();
            }
          } else if constexpr (std::is_same_v<J, just::Axiom>) {
            return check_axiom(j, here);
          } else if constexpr (std::is_same_v<J, just::ModusPonens>) {
            if (auto e = earlier(line, j.premise); !e.empty()) return e;
            if (auto e = earlier(line, j.implication); !e.empty()) return e;
            const Formula expected = normalize(Formula::implication(formula_at(j.premise), line.formula));
            if (normal_[j.implication - 1] != expected) {
              return "line " + std::to_string(j.implication) + " is not an implication from line " +
                     std::to_string(j.premise) + " to this line";
            }
            return "";
          } else if constexpr (std::is_same_v<J, just::NecU>) {
            if (auto e = earlier(line, j.source); !e.empty()) return e;
            if (normalize(Formula::universal(formula_at(j.source))) != here) {
              return "formula is not U applied to line " + std::to_string(j.source);
            }
            return "";
          } else if constexpr (std::is_same_v<J, just::Sub>) {
            if (auto e = earlier(line, j.source); !e.empty()) return e;
            if (!is_valid_letter(j.letter)) return "'" + j.letter + "' is not a proposition letter";
            if (normalize(substitute(formula_at(j.source), j.letter, j.replacement)) != here) {
              return "formula is not line " + std::to_string(j.source) + " with " + j.letter + " substituted";
            }
            return "";
          } else {
            if (j.index == 0 || j.index > hypotheses_.size()) {
              return "dangling reference to hypothesis " + std::to_string(j.index);
            }
            if (normalize(hypotheses_[j.index - 1]) != here) {
              return "formula differs from hypothesis " + std::to_string(j.index);
            }
            return "";
          }
        },
        line.justification);
  }

  std::string check_axiom(const just::Axiom& j, const Formula& here) const {
    const auto schema = axiom_schema(j.name);
    if (!schema) return "unknown axiom '" + j.name + "'";
    const auto needed = letters(*schema);
    for (const auto& letter : needed) {
      if (!j.binding.contains(letter)) return "malformed binding: " + j.name + " needs a value for " + letter;
    }
    for (const auto& [letter, value] : j.binding) {
      if (!needed.contains(letter)) return "malformed binding: " + letter + " does not occur in " + j.name;
    }
    if (normalize(substitute_all(*schema, j.binding)) != here) {
      return "formula is not the stated instance of " + j.name;
    }
    return "";
  }

  std::string earlier(const ProofLine& line, std::size_t ref) const {
    if (ref == 0 || ref >= line.index) return "dangling reference to line " + std::to_string(ref);
    return "";
  }

  const Formula& formula_at(std::size_t ref) const { return proof_.lines[ref - 1].formula; }

  const Proof& proof_;
  std::span<const Formula> hypotheses_;
  std::vector<Formula> normal_;
};

}  // namespace

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : schemas()) n.push_back(s.name);
    return n;
  }();
  return names;
}

std::optional<Formula> axiom_schema(std::string_view name) {
  for (const auto& s : schemas()) {
    if (s.name == name) return s.formula;
  }
  return std::nullopt;
}

Verdict check_proof(const Proof& proof) { return Checker(proof, {}).run(); }

Verdict check_proof_under(const Proof& proof, std::span<const Formula> hypotheses) {
  return Checker(proof, hypotheses).run();
}

Verdict check(const ProofDocument& doc) { return check_proof_under(doc.proof, doc.hypotheses); }

// ---------------------------------------------------------------------------
// Proof files

namespace {

class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ProofSyntaxError(line_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '=') ++pos_;
    if (pos_ == start) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    const std::string w = word();
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || p != w.data() + w.size()) fail("expected a line number, found '" + w + "'");
    return v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Formula formula_prefix() {
    skip_space();
    try {
      auto r = parse_formula_prefix(text_, pos_);
      pos_ = r.end;
      return r.formula;
    } catch (const FormulaSyntaxError& e) {
      fail(e.what());
    }
  }

  Formula formula_rest() {
    Formula f = formula_prefix();
    if (!at_end()) fail("unexpected text after formula: '" + std::string(text_.substr(pos_)) + "'");
    return f;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Formula parse_line_formula(std::string_view text, std::size_t line) {
  try {
    return parse_formula(text);
  } catch (const FormulaSyntaxError& e) {
    throw ProofSyntaxError(line, e.what());
  }
}

Justification parse_justification(std::string_view text, std::size_t line) {
  LineReader r(text, line);
  const std::string kind = r.word();
  Justification j;
  if (kind == "taut") {
    j = just::Taut{};
  } else if (kind == "axiom") {
    just::Axiom ax;
    ax.name = r.word();
    while (!r.at_end()) {
      const std::string letter = r.word();
      if (!is_valid_letter(letter)) r.fail("'" + letter + "' is not a schema letter");
      r.expect('=');
      if (ax.binding.contains(letter)) r.fail("letter " + letter + " bound twice");
      ax.binding.emplace(letter, r.formula_prefix());
    }
    j = std::move(ax);
  } else if (kind == "mp") {
    const std::size_t premise = r.number();
    j = just::ModusPonens{premise, r.number()};
  } else if (kind == "necu") {
    j = just::NecU{r.number()};
  } else if (kind == "sub") {
    const std::size_t source = r.number();
    std::string letter = r.word();
    j = just::Sub{source, std::move(letter), r.formula_rest()};
    return j;
  } else if (kind == "hyp") {
    j = just::Hyp{r.number()};
  } else {
    r.fail("unknown justification '" + kind + "'");
  }
  if (!r.at_end()) r.fail("unexpected text after justification");
  return j;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ProofDocument parse_proof(std::string_view text) {
  ProofDocument doc;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    if (raw.starts_with("assume") && (raw.size() == 6 || std::isspace(static_cast<unsigned char>(raw[6])))) {
      doc.hypotheses.push_back(parse_line_formula(trim(raw.substr(6)), number));
      continue;
    }

    const std::size_t dot = raw.find('.');
    if (dot == std::string_view::npos) throw ProofSyntaxError(number, "expected '<n>. <formula> ; <justification>'");
    std::size_t index = 0;
    const std::string_view digits = trim(raw.substr(0, dot));
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || p != digits.data() + digits.size() || digits.empty()) {
      throw ProofSyntaxError(number, "expected a line number before '.'");
    }
    const std::string_view body = raw.substr(dot + 1);
    const std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw ProofSyntaxError(number, "missing ';' before the justification");
    Formula f = parse_line_formula(body.substr(0, semi), number);
    doc.proof.lines.push_back({index, std::move(f), parse_justification(body.substr(semi + 1), number)});
  }
  return doc;
}

std::string print_proof(const ProofDocument& doc) {
  std::ostringstream out;
  for (const auto& h : doc.hypotheses) out << "assume " << print_formula(h) << '\n';
  for (const auto& line : doc.proof.lines) {
    out << line.index << ". " << print_formula(line.formula) << " ; ";
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, just::Taut>) {
            out << "taut";
          } else if constexpr (std::is_same_v<J, just::Axiom>) {
            out << "axiom " << j.name;
            for (const auto& [letter, value] : j.binding) out << ' ' << letter << '=' << print_formula(value);
          } else if constexpr (std::is_same_v<J, just::ModusPonens>) {
            out << "mp " << j.premise << ' ' << j.implication;
          } else if constexpr (std::is_same_v<J, just::NecU>) {
            out << "necu " << j.source;
          } else if constexpr (std::is_same_v<J, just::Sub>) {
            out << "sub " << j.source << ' ' << j.letter << ' ' << print_formula(j.replacement);
          } else {
            out << "hyp " << j.index;
          }
        },
        line.justification);
    out << '\n';
  }
  return out.str();
}

}  // namespace khow
