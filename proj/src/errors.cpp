#include "purekit/errors.hpp"

namespace purekit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::InvalidState: return "INVALID_STATE";
    case ErrorCode::InvalidBloch: return "INVALID_BLOCH";
    case ErrorCode::NotUnitary: return "NOT_UNITARY";
    case ErrorCode::CompletenessViolation: return "COMPLETENESS_VIOLATION";
    case ErrorCode::OrthogonalProjection: return "ORTHOGONAL_PROJECTION";
    case ErrorCode::DegenerateState: return "DEGENERATE_STATE";
    case ErrorCode::InfeasibleRecord: return "INFEASIBLE_RECORD";
    case ErrorCode::NotAMeasurementMixture: return "NOT_A_MEASUREMENT_MIXTURE";
  }
  return "UNKNOWN";
}

bool is_domain_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateState:
    case ErrorCode::InfeasibleRecord:
    case ErrorCode::NotAMeasurementMixture:
    case ErrorCode::OrthogonalProjection:
    case ErrorCode::CompletenessViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace purekit
