#pragma once

#include <stdexcept>
#include <string>

namespace scissors {

/// A precondition of an operation was violated (wrong dimension, non-orientable
/// input where orientation is required, missing label, ...).
class ContractError : public std::runtime_error {
public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data is internally inconsistent (broken composition table, d*d != 0,
/// chain map that does not commute, ...).
class StructuralError : public ContractError {
public:
  explicit StructuralError(const std::string& what) : ContractError(what) {}
};

/// Text input could not be parsed.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Enumeration exceeded its configured budget.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scissors
