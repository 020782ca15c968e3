#pragma once

#include <stdexcept>
#include <string>

namespace sumset {

// A caller broke an operation's precondition (bad dimension, empty input,
// hypothesis of a selection routine not met, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Something that is a theorem, or an internal guarantee, did not hold.
// Always a bug; the message carries a dump of the offending instance.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive enumeration would exceed its guard.
class EnumerationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sumset
