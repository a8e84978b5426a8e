#include "khow/error.hpp"

namespace khow {

namespace {

std::string describe_syntax(std::size_t offset, const std::string& detail, const std::vector<std::string>& expected) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

std::string with_line(const char* what, std::size_t line, const std::string& detail) {
  if (line == 0) return std::string(what) + ": " + detail;
  return std::string(what) + " line " + std::to_string(line) + ": " + detail;
}

}  // namespace

FormulaSyntaxError::FormulaSyntaxError(std::size_t offset, std::string detail, std::vector<std::string> expected)
    : Error(describe_syntax(offset, detail, expected)),
      offset_(offset),
      detail_(std::move(detail)),
      expected_(std::move(expected)) {}

ModelError::ModelError(std::size_t line, const std::string& detail) : Error(with_line("model", line, detail)), line_(line), detail_(detail) {}

ProofSyntaxError::ProofSyntaxError(std::size_t line, const std::string& detail)
    : Error(with_line("proof", line, detail)), line_(line), detail_(detail) {}

TautologyBudgetError::TautologyBudgetError(std::size_t letters, std::size_t budget)
    : Error("tautology check needs " + std::to_string(letters) + " propositional variables; the budget is " +
            std::to_string(budget)) {}

}  // namespace khow
