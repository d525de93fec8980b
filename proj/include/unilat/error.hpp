#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unilat {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  EmptyCarrier,
  CycleDetected,
  NotAPartialOrder,
  NoMeet,
  NoJoin,
  NotBounded,
  NotComparable,
  BadNeutral,
  DomainMismatch,
  DomainTooLarge,
  SubOpInvalid,
  ConflictAt,
  RoleMismatch,
  CapExceeded,
  MissingNeutralParam,
  BadOrder,
  SyntaxError,
  BoundTopMismatch,
  IndexOutOfRange,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unilat
