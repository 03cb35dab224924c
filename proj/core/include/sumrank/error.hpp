#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumrank {

enum class ErrorCode {
  division_by_zero,
  level_mismatch,
  zero_input,
  bad_tower,
  not_a_divisor,
  not_square,
  singular_leading_block,
  ambient_mismatch,
  block_out_of_range,
  bad_params,
  too_large,
  length_mismatch,
  singular_m,
  bad_roots,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sumrank
