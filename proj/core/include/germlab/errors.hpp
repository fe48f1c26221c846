#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germlab {

enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  InvalidArgument,
  UnsubstitutedParameter,
  NonIcis,
  NonIsolated,
  NotAFinite,
  InvalidAction,
  NonIntegral,
  Precondition,
  RetriesExhausted,
};


class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure; `position` is a 0-based byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Syntax, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownIdentifier: return "UNKNOWN_IDENTIFIER";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::UnsubstitutedParameter: return "UNSUBSTITUTED_PARAMETER";
    case ErrorCode::NonIcis: return "NON_ICIS";
    case ErrorCode::NonIsolated: return "NON_ISOLATED";
    case ErrorCode::NotAFinite: return "NOT_A_FINITE";
    case ErrorCode::InvalidAction: return "INVALID_ACTION";
    case ErrorCode::NonIntegral: return "NON_INTEGRAL";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::RetriesExhausted: return "RETRIES_EXHAUSTED";
  }
  return "UNKNOWN";
}

}  // namespace germlab
