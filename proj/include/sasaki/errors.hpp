#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sasaki {

/// Failure categories surfaced by every module and mapped onto CLI
/// diagnostics ({"error": code, "detail": text}).
enum class ErrorCode {
  invalid_argument,
  invalid_polytope,
  invalid_cone,
  not_a_reeb_vector,
  invalid_kahler_class,
  inconsistent_input,
  guarantee_not_applicable,
  invalid_partition,
  out_of_domain,
  not_convex_here,
  not_a_product,
  internal_inconsistency,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sasaki
