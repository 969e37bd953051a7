#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamilstem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input bytes are not valid UTF-8. `offset` is the byte index of the first
/// offending byte.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A line-oriented input file (rules or gold) failed to parse.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two rules share (class, pattern).
class RuleConflictError : public Error {
 public:
  RuleConflictError(std::size_t first_line, std::size_t second_line,
                    const std::string& what)
      : Error(what), first_line_(first_line), second_line_(second_line) {}
  std::size_t first_line() const noexcept { return first_line_; }
  std::size_t second_line() const noexcept { return second_line_; }

 private:
  std::size_t first_line_;
  std::size_t second_line_;
};

/// A rule whose application would not make the word strictly lighter.
class TerminationError : public Error {
 public:
  TerminationError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Accuracy requested over an empty denominator.
class MetricError : public Error {
 public:
  using Error::Error;
};

/// A root the paradigm generator cannot inflect reversibly.
class ParadigmError : public Error {
 public:
  using Error::Error;
};

}  // namespace tamilstem
