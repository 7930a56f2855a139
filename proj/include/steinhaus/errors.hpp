#pragma once

#include <stdexcept>
#include <string>

namespace steinhaus {

/// Machine-checkable failure categories used across the library.
enum class ErrorKind {
  NonUnitMass,         // distribution probabilities do not sum to 1
  NegativeMass,        // a probability is negative
  WrongArity,          // probability vector length != base
  BaseMismatch,        // operands built over different bases
  OutOfRange,          // value outside its documented domain (e.g. x not in [0,1])
  EmptyInterval,       // interval endpoints with a >= b where a < b is required
  PerfectSquare,       // sqrt digit source given a perfect square
  NotANumber,          // sqrt digit source given m < 2
  IoError,             // file could not be opened/read
  InvalidDigit,        // digit outside [0, b-1] (carries position for files)
  StreamExhausted,     // stream ended before the requested digit count
  ExplosiveK,          // b^K exceeds the word-table bound
  DegenerateDigit,     // block-pattern stream given a = 0
  NotFiniteExpansion,  // rational with no finite base-b expansion
  ParseError,          // malformed textual input (rationals, dist files, results)
  InvalidArgument,     // precondition violation not covered by a kind above
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace steinhaus
