#include "shiftmon/error.hpp"

namespace shiftmon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kNonPrimitive: return "non-primitive";
    case ErrorCode::kNotMinimal: return "not-minimal";
    case ErrorCode::kNotAnElement: return "not-an-element";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kNotARelation: return "not-a-relation";
    case ErrorCode::kNotInImage: return "not-in-image";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kVerificationFailed: return "verification-failed";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace shiftmon
