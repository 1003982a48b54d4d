#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digitop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPointError : public Error {
 public:
  explicit UnknownPointError(const std::string& id)
      : Error("unknown point '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Input violates an operation's precondition (not an edge, not a manifold,
// id collision, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration limit was hit. Never a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace digitop
