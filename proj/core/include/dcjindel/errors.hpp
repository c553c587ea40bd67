#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcj {

// Genome file syntax problem; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class NotSingular : public std::runtime_error {
public:
  explicit NotSingular(const std::string& msg) : std::runtime_error(msg) {}
};

class NotCircular : public std::runtime_error {
public:
  explicit NotCircular(const std::string& msg) : std::runtime_error(msg) {}
};

// Sibling-set enumeration would exceed the configured budget; carries the
// total count (saturated at UINT64_MAX when it overflows).
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t count, std::uint64_t budget)
      : std::runtime_error("sibling-set count " + std::to_string(count) +
                           " exceeds budget " + std::to_string(budget)),
        count_(count) {}
  std::uint64_t count() const { return count_; }

private:
  std::uint64_t count_;
};

class InvalidSiblingSet : public std::runtime_error {
public:
  explicit InvalidSiblingSet(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidCapping : public std::runtime_error {
public:
  explicit InvalidCapping(const std::string& msg) : std::runtime_error(msg) {}
};

class UnknownVariable : public std::runtime_error {
public:
  explicit UnknownVariable(const std::string& name)
      : std::runtime_error("unknown variable: " + name) {}
};

class UnparsableValue : public std::runtime_error {
public:
  explicit UnparsableValue(const std::string& text)
      : std::runtime_error("unparsable value: " + text) {}
};

class InfeasibleAssignment : public std::runtime_error {
public:
  explicit InfeasibleAssignment(const std::string& msg) : std::runtime_error(msg) {}
};

// The distance recovered from a solver assignment disagrees with an
// independent rescoring of the induced decomposition. Always a bug.
class ScoreMismatch : public std::logic_error {
public:
  explicit ScoreMismatch(const std::string& msg) : std::logic_error(msg) {}
};

class FingerprintMismatch : public std::runtime_error {
public:
  explicit FingerprintMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidCut : public std::runtime_error {
public:
  explicit InvalidCut(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidLocation : public std::runtime_error {
public:
  explicit InvalidLocation(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigInvalid : public std::runtime_error {
public:
  explicit ConfigInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dcj
