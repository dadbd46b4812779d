#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftmon {

using Int = std::int64_t;

enum class ErrorCode {
  kInvalidInput,
  kNonPrimitive,
  kNotMinimal,
  kNotAnElement,
  kBudgetExceeded,
  kOverflow,
  kNotARelation,
  kNotInImage,
  kPrecondition,
  kVerificationFailed,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit overflow in addition");
  }
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit overflow in multiplication");
  }
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit overflow in subtraction");
  }
  return out;
}

}  // namespace checked
}  // namespace shiftmon
