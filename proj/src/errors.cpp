#include "steinhaus/errors.hpp"

namespace steinhaus {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUnitMass: return "NonUnitMass";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::PerfectSquare: return "PerfectSquare";
    case ErrorKind::NotANumber: return "NotANumber";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidDigit: return "InvalidDigit";
    case ErrorKind::StreamExhausted: return "StreamExhausted";
    case ErrorKind::ExplosiveK: return "ExplosiveK";
    case ErrorKind::DegenerateDigit: return "DegenerateDigit";
    case ErrorKind::NotFiniteExpansion: return "NotFiniteExpansion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace steinhaus
