#pragma once

#include <stdexcept>
#include <string>

namespace adaprompt {

// Stable error identifiers. The C API maps these one-to-one onto its
// integer error codes, so the order here must stay in sync with adaprompt.h.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  io_error = 2,
  parse_error = 3,
  config_error = 4,

  empty_decomposition = 10,
  duplicate_word_set = 11,
  unresolvable_word = 12,
  duplicate_label = 13,

  template_overflow = 20,
  span_lost = 21,

  dimension_mismatch = 30,
  position_not_masked = 31,

  empty_batch = 40,
  non_finite_loss = 41,

  length_exceeded = 50,
  vocab_overflow = 51,

  insufficient_class_instances = 60,
  all_points_failed = 61,
  length_mismatch = 62,

  internal = 99,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

// Short-hand used across the library: throw Error with formatted context.
[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace adaprompt
