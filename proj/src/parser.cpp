#include <pthread.h>

#include <cctype>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "khow/error.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

enum class Tok {
  End,
  Invalid,
  UnknownKeyword,
  Ident,
  Top,
  Bot,
  Univ,
  Kh,
  Khp,
  Not,
  And,
  Or,
  Arrow,
  DoubleArrow,
  LParen,
  RParen,
  Comma,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t pos) : text_(text), pos_(pos) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  std::string_view spelling(const Token& t) const { return text_.substr(t.begin, t.end - t.begin); }

  // 1-based position in characters, counting UTF-8 sequences once.
  std::size_t char_offset(std::size_t byte) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < byte && i < text_.size(); ++i) {
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++n;
    }
    return n + 1;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.begin = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.end = pos_;
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      current_.kind = k;
      current_.end = ++pos_;
    };
    switch (c) {
      case '~': return single(Tok::Not);
      case '&': return single(Tok::And);
      case '|': return single(Tok::Or);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") {
      current_.kind = Tok::Arrow;
      current_.end = pos_ += 2;
      return;
    }
    if (text_.substr(pos_, 3) == "<->") {
      current_.kind = Tok::DoubleArrow;
      current_.end = pos_ += 3;
      return;
    }
    if (is_word_start(c)) {
      std::size_t e = pos_;
      while (e < text_.size() && is_word_char(text_[e])) ++e;
      const std::string_view w = text_.substr(pos_, e - pos_);
      current_.end = e;
      pos_ = e;
      if (w == "top") current_.kind = Tok::Top;
      else if (w == "bot") current_.kind = Tok::Bot;
      else if (w == "U") current_.kind = Tok::Univ;
      else if (w == "Kh") current_.kind = Tok::Kh;
      else if (w == "Khp") current_.kind = Tok::Khp;
      else if (std::islower(static_cast<unsigned char>(w.front()))) current_.kind = Tok::Ident;
      else current_.kind = Tok::UnknownKeyword;
      return;
    }
    // Leave the position alone: a prefix parse may legitimately stop here.
    current_.kind = Tok::Invalid;
    current_.end = pos_ + 1;
  }

  std::string_view text_;
  std::size_t pos_;
  Token current_;
};

const std::vector<std::string>& operand_starts() {
  static const std::vector<std::string> v{"'~'", "'U'", "'Kh'", "'Khp'", "'top'", "'bot'", "letter", "'('"};
  return v;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t start) : lex_(text, start) {}

  Formula formula() { return implication(); }

  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) fail(t, "unexpected input after formula", {"'&'", "'|'", "'->'", "'<->'", "end of input"});
  }

  std::size_t position() const { return lex_.peek().begin; }

 private:
  [[noreturn, gnu::noinline, gnu::cold]] void fail(const Token& t, const std::string& what, std::vector<std::string> expected = {}) {
    std::string detail = what;
    if (t.kind == Tok::End) {
      detail += ", found end of input";
    } else if (t.kind == Tok::UnknownKeyword) {
      throw FormulaSyntaxError(lex_.char_offset(t.begin), "unknown keyword '" + std::string(lex_.spelling(t)) + "'",
                               std::move(expected));
    } else {
      detail += ", found '" + std::string(lex_.spelling(t)) + "'";
    }
    throw FormulaSyntaxError(lex_.char_offset(t.begin), detail, std::move(expected));
  }

  // Error paths live out of line to keep the recursive frames small.
  [[noreturn, gnu::noinline, gnu::cold]] void too_deep() {
    throw FormulaSyntaxError(lex_.char_offset(lex_.peek().begin),
                             "nesting deeper than " + std::to_string(kMaxFormulaDepth) + " levels");
  }

  [[noreturn, gnu::noinline, gnu::cold]] void missing(const char* spelled) {
    fail(lex_.peek(), "unexpected token", {spelled});
  }

  void enter() {
    if (++depth_ > kMaxFormulaDepth) too_deep();
  }

  void require(Tok kind, const char* spelled) {
    if (lex_.peek().kind != kind) missing(spelled);
    lex_.take();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      enter();
      Formula rhs = implication();
      --depth_;
      return Formula::implication(lhs, rhs);
    }
    if (lex_.peek().kind == Tok::DoubleArrow) {
      lex_.take();
      return Formula::equivalence(lhs, disjunction());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Top:
        lex_.take();
        return Formula::top();
      case Tok::Bot:
        lex_.take();
        return Formula::bot();
      case Tok::Ident:
        lex_.take();
        return Formula::atom(std::string(lex_.spelling(t)));
      case Tok::Not:
      case Tok::Univ: {
        lex_.take();
        enter();
        Formula child = unary();
        --depth_;
        return t.kind == Tok::Not ? Formula::negation(child) : Formula::universal(child);
      }
      case Tok::Kh:
      case Tok::Khp:
        return knows_how(t.kind);
      case Tok::LParen:
        return group();
      default:
        no_operand(t);
    }
  }

  [[noreturn, gnu::noinline, gnu::cold]] void no_operand(const Token& t) {
    fail(t, "expected a formula", operand_starts());
  }

  [[gnu::noinline]] Formula knows_how(Tok kind) {
    lex_.take();
    enter();
    require(Tok::LParen, "'('");
    Formula cond = formula();
    require(Tok::Comma, "','");
    Formula goal = formula();
    require(Tok::RParen, "')'");
    --depth_;
    return kind == Tok::Kh ? Formula::knows_how(cond, goal) : Formula::knows_how_plus(cond, goal);
  }

  [[gnu::noinline]] Formula group() {
    lex_.take();
    enter();
    Formula inner = formula();
    require(Tok::RParen, "')'");
    --depth_;
    return inner;
  }

  Lexer lex_;
  std::size_t depth_ = 0;
};

// Inputs longer than this are parsed on a thread with a stack big enough for
// kMaxFormulaDepth levels of recursion.
constexpr std::size_t kLongInput = 2048;
constexpr std::size_t kBigStack = std::size_t{256} << 20;

void run_with_big_stack(const std::function<void()>& body) {
  struct Job {
    const std::function<void()>* body;
    std::exception_ptr error;
  } job{&body, nullptr};
  auto trampoline = [](void* arg) -> void* {
    auto* j = static_cast<Job*>(arg);
    try {
      (*j->body)();
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kBigStack);
  pthread_t thread;
  const int rc = pthread_create(&thread, &attr, trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    body();  // fall back to the current stack
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

template <typename Fn>
auto guarded(std::string_view text, Fn fn) {
  if (text.size() <= kLongInput) return fn();
  std::optional<decltype(fn())> out;
  run_with_big_stack([&] { out.emplace(fn()); });
  return std::move(*out);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return guarded(text, [&] {
    Parser p(text, 0);
    Formula f = p.formula();
    p.expect_end();
    return f;
  });
}

PrefixParse parse_formula_prefix(std::string_view text, std::size_t start) {
  return guarded(text, [&] {
    Parser p(text, start);
    Formula f = p.formula();
    // End of the last consumed token: back up over the whitespace the lexer
    // skipped while peeking.
    std::size_t end = p.position();
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return PrefixParse{f, end};
  });
}

bool is_valid_letter(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!is_word_char(c)) return false;
  }
  return name != "top" && name != "bot";
}

namespace {

// Binding strength: 0 for ->/<->, 1 for |, 2 for &, 3 for everything tighter.
int strength(Op op) {
  switch (op) {
    case Op::Implies:
    case Op::Iff:
      return 0;
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(f, out);
  if (wrap) out += ')';
}

void print_infix(const Formula& f, const char* symbol, bool wrap_left, bool wrap_right, std::string& out) {
  print_wrapped(f.lhs(), wrap_left, out);
  out += symbol;
  print_wrapped(f.rhs(), wrap_right, out);
}

void print(const Formula& f, std::string& out) {
  const int l = arity(f.op()) >= 1 ? strength(f.lhs().op()) : 3;
  const int r = arity(f.op()) == 2 ? strength(f.rhs().op()) : 3;
  switch (f.op()) {
    case Op::Top:
      out += "top";
      return;
    case Op::Bot:
      out += "bot";
      return;
    case Op::Atom:
      out += f.name();
      return;
    case Op::Not:
      out += '~';
      print_wrapped(f.lhs(), l < 3, out);
      return;
    case Op::Univ:
      out += l < 3 ? "U" : "U ";
      print_wrapped(f.lhs(), l < 3, out);
      return;
    case Op::Kh:
    case Op::KhPlus:
      out += f.op() == Op::Kh ? "Kh(" : "Khp(";
      print(f.lhs(), out);
      out += ", ";
      print(f.rhs(), out);
      out += ')';
      return;
    case Op::And:
      return print_infix(f, " & ", l < 2, r <= 2, out);
    case Op::Or:
      return print_infix(f, " | ", l < 1, r <= 1, out);
    case Op::Implies:
      return print_infix(f, " -> ", l == 0, f.rhs().op() == Op::Iff, out);
    case Op::Iff:
      return print_infix(f, " <-> ", l == 0, r == 0, out);
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace khow
