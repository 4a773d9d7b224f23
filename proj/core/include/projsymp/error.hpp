#ifndef PROJSYMP_ERROR_HPP
#define PROJSYMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace projsymp {

/// Failure categories surfaced by the library. Every throwing operation
/// documents which kinds it can raise.
enum class ErrorKind {
  NotASquare,
  InsufficientPrecision,
  WrongWeight,
  GeometryMismatch,
  NotSquarefree,
  DegenerateMap,
  BasePointMismatch,
  NotGlobal,
  UnstableTruncation,
  TheoremViolation,
  BadWord,
  ResampleNeeded,
  IllConditioned,
  NotACocycle,
  ConfigError,
  DomainError,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::WrongWeight: return "WrongWeight";
    case ErrorKind::GeometryMismatch: return "GeometryMismatch";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::NotGlobal: return "NotGlobal";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::BadWord: return "BadWord";
    case ErrorKind::ResampleNeeded: return "ResampleNeeded";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace projsymp

#endif
