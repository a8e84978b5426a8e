#include <cstdint>
#include <unordered_map>
#include <vector>

#include "khow/error.hpp"
#include "khow/proof.hpp"

namespace khow {

namespace {

// Straight-line program over 64 assignments at a time.
struct Instr {
  enum Kind : std::uint8_t { Var, True, Not, And } kind;
  std::size_t a = 0;
  std::size_t b = 0;
};

class Compiler {
 public:
  std::size_t emit(const Formula& f) {
    if (auto it = slots_.find(f); it != slots_.end()) return it->second;
    Instr ins{};
    switch (f.op()) {
      case Op::Top:
        ins.kind = Instr::True;
        break;
      case Op::Not:
        ins = {Instr::Not, emit(f.lhs())};
        break;
      case Op::And: {
        const std::size_t l = emit(f.lhs());
        ins = {Instr::And, l, emit(f.rhs())};
        break;
      }
      default:
        // Atoms and Kh-rooted subformulas are the propositional variables.
        ins = {Instr::Var, variables_++};
        break;
    }
    program_.push_back(ins);
    slots_.emplace(f, program_.size() - 1);
    return program_.size() - 1;
  }

  const std::vector<Instr>& program() const { return program_; }
  std::size_t variables() const { return variables_; }

 private:
  std::vector<Instr> program_;
  std::size_t variables_ = 0;
  std::unordered_map<Formula, std::size_t, FormulaHash> slots_;
};

// Truth pattern of variable v < 6 across the 64 assignments in a block.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

bool is_tautology(const Formula& f) {
  Compiler c;
  const std::size_t root = c.emit(normalize(f));
  const std::size_t k = c.variables();
  if (k > kTautologyBudget) throw TautologyBudgetError(k, kTautologyBudget);

  const auto& prog = c.program();
  const std::uint64_t live = k >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << k)) - 1;
  const std::uint64_t blocks = k > 6 ? std::uint64_t{1} << (k - 6) : 1;
  std::vector<std::uint64_t> value(prog.size());
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t i = 0; i < prog.size(); ++i) {
      const Instr& ins = prog[i];
      switch (ins.kind) {
        case Instr::Var:
          value[i] = ins.a < 6 ? kLowPatterns[ins.a] : ((block >> (ins.a - 6)) & 1U ? ~std::uint64_t{0} : 0);
          break;
        case Instr::True:
          value[i] = ~std::uint64_t{0};
          break;
        case Instr::Not:
          value[i] = ~value[ins.a];
          break;
        case Instr::And:
          value[i] = value[ins.a] & value[ins.b];
          break;
      }
    }
    if ((value[root] & live) != live) return false;
  }
  return true;
}

}  // namespace khow
