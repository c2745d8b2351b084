#ifndef ALCOR_ERRORS_HPP
#define ALCOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcor {

// Base class of every failure the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical problem in a document, concept, or query string.
// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// A knowledge base, vocabulary, or statement violates a structural invariant
// (undeclared name, duplicate declaration, bad weight, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The interpretation space exceeds the configured bit budget.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// The strict part of a knowledge base has no Herbrand model, so no ranking
// function with a rank-0 interpretation exists for it.
class UnsatisfiableStrictPartError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its contract (defeasible statement where a
// classical one is required, missing k, out-of-range index, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace alcor

#endif  // ALCOR_ERRORS_HPP
