#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace khow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset` is the 1-based character position of the
/// offending token; `expected` lists the tokens that would have been accepted.
class FormulaSyntaxError : public Error {
 public:
  FormulaSyntaxError(std::size_t offset, std::string detail, std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Malformed or inconsistent model file / model query. `line` is 1-based, or
/// 0 when the problem is not tied to a source line.
class ModelError : public Error {
 public:
  ModelError(std::size_t line, const std::string& detail);

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Malformed proof file.
class ProofSyntaxError : public Error {
 public:
  ProofSyntaxError(std::size_t line, const std::string& detail);

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Raised by the tautology checker when a formula has too many distinct
/// propositional variables after abstraction.
class TautologyBudgetError : public Error {
 public:
  TautologyBudgetError(std::size_t letters, std::size_t budget);
};

/// Invalid generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace khow
