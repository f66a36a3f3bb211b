#include "adaprompt/error.hpp"

namespace adaprompt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::config_error: return "config_error";
    case ErrorCode::empty_decomposition: return "empty_decomposition";
    case ErrorCode::duplicate_word_set: return "duplicate_word_set";
    case ErrorCode::unresolvable_word: return "unresolvable_word";
    case ErrorCode::duplicate_label: return "duplicate_label";
    case ErrorCode::template_overflow: return "template_overflow";
    case ErrorCode::span_lost: return "span_lost";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::position_not_masked: return "position_not_masked";
    case ErrorCode::empty_batch: return "empty_batch";
    case ErrorCode::non_finite_loss: return "non_finite_loss";
    case ErrorCode::length_exceeded: return "length_exceeded";
    case ErrorCode::vocab_overflow: return "vocab_overflow";
    case ErrorCode::insufficient_class_instances: return "insufficient_class_instances";
    case ErrorCode::all_points_failed: return "all_points_failed";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace adaprompt
