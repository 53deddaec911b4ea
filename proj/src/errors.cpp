#include "sasaki/errors.hpp"

namespace sasaki {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_polytope: return "invalid-polytope";
    case ErrorCode::invalid_cone: return "invalid-cone";
    case ErrorCode::not_a_reeb_vector: return "not-a-reeb-vector";
    case ErrorCode::invalid_kahler_class: return "invalid-kahler-class";
    case ErrorCode::inconsistent_input: return "inconsistent-input";
    case ErrorCode::guarantee_not_applicable: return "guarantee-not-applicable";
    case ErrorCode::invalid_partition: return "invalid-partition";
    case ErrorCode::out_of_domain: return "out-of-domain";
    case ErrorCode::not_convex_here: return "not-convex-here";
    case ErrorCode::not_a_product: return "not-a-product";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace sasaki
