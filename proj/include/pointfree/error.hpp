#pragma once

#include <stdexcept>
#include <string>

namespace pointfree {

enum class ErrorCode {
  NotAPartialOrder,
  NotALattice,
  NotDistributive,
  NotAHomomorphism,
  IndexOutOfRange,
  FrameMismatch,
  NotMonotone,
  RelationViolated,
  NotAnExtendedScale,
  MeetNotZero,
  NotDiscrete,
  NotNonnegative,
  EmptyFamily,
  PreconditionFailed,
  NotBoolean,
  OracleNotIso,
  NotHausdorff,
  NotNearlyFinite,
  NotASpace,
  EndpointOrder,
  NotSemicontinuous,
  NotNormalLsc,
  UndefinedSum,
  NotPositive,
  NotWeakUnit,
  GNotPositive,
  DimensionMismatch,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pointfree
