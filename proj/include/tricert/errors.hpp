#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, certificate or edge-representation text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by the caller (dead node, S == G, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

/// Edge set does not have the shape of a subdivision of a 3-connected graph.
class StructureError : public Error {
 public:
  using Error::Error;
};

class TransformError : public Error {
 public:
  using Error::Error;
};

/// Edge-representation replay failed; the message names the offending op.
class ReplayError : public Error {
 public:
  using Error::Error;
};

}  // namespace tricert
