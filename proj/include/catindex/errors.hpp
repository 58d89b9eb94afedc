#pragma once

#include <stdexcept>
#include <string>

namespace catindex {

// Every failure mode surfaced by the library. CLI and bindings map these
// to one-line machine-parsable messages of the form "error: <code>: <detail>".
enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  CycleDetected,
  Disconnected,
  EmptyGraph,
  NotAPath,
  NotACaterpillar,
  InvalidCode,
  SizeOverflow,
  SizeLimit,
  Overflow,
  NoConvergence,
  UnknownClaim,
  DomainViolation,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotACaterpillar: return "NotACaterpillar";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace catindex
