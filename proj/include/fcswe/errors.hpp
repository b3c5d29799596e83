#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcswe {

/// Error taxonomy shared by the whole solver. Each kind maps to a stable
/// numeric code at the C API boundary.
enum class ErrorKind {
  InvalidConfig,
  GridTooCoarse,
  DryState,
  BlowUp,
  CacheIntegrity,
  StaleCache,
  UndefinedBaseline,
  PrecomputeFailure,
  Io,
  Parse,
  Internal,
};

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidConfig: return "invalid-config";
    case ErrorKind::GridTooCoarse: return "grid-too-coarse";
    case ErrorKind::DryState: return "dry-state";
    case ErrorKind::BlowUp: return "blow-up";
    case ErrorKind::CacheIntegrity: return "cache-integrity";
    case ErrorKind::StaleCache: return "stale-cache";
    case ErrorKind::UndefinedBaseline: return "undefined-baseline";
    case ErrorKind::PrecomputeFailure: return "precompute-failure";
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw SolverError(kind, msg);
}

}  // namespace fcswe
