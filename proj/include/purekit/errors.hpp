#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace purekit {

enum class ErrorCode {
  InvalidInput,
  InvalidState,
  InvalidBloch,
  NotUnitary,
  CompletenessViolation,
  OrthogonalProjection,
  DegenerateState,
  InfeasibleRecord,
  NotAMeasurementMixture,
};

/// Stable string code, used in CLI error objects.
std::string_view error_code_name(ErrorCode code);

/// Domain errors are well-formed inputs on which an operation has no answer
/// (as opposed to inputs that violate a type invariant).
bool is_domain_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define PUREKIT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message)                       \
        : Error(ErrorCode::Name, message) {}                        \
  };

PUREKIT_DEFINE_ERROR(InvalidInput)
PUREKIT_DEFINE_ERROR(InvalidState)
PUREKIT_DEFINE_ERROR(InvalidBloch)
PUREKIT_DEFINE_ERROR(NotUnitary)
PUREKIT_DEFINE_ERROR(CompletenessViolation)
PUREKIT_DEFINE_ERROR(OrthogonalProjection)
PUREKIT_DEFINE_ERROR(DegenerateState)
PUREKIT_DEFINE_ERROR(InfeasibleRecord)
PUREKIT_DEFINE_ERROR(NotAMeasurementMixture)

#undef PUREKIT_DEFINE_ERROR

}  // namespace purekit
