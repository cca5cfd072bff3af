#include "quasicartan/error.hpp"

namespace qc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::not_sign_skew_symmetric: return "NotSignSkewSymmetric";
    case ErrorCode::no_symmetrizer: return "NoSymmetrizer";
    case ErrorCode::not_skew_symmetric: return "NotSkewSymmetric";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::bounds_exceeded: return "BoundsExceeded";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::mixed_signs: return "MixedSigns";
    case ErrorCode::sign_coherence_lost: return "SignCoherenceLost";
    case ErrorCode::not_acyclic: return "NotAcyclic";
    case ErrorCode::not_unit_norm: return "NotUnitNorm";
    case ErrorCode::not_a_companion: return "NotACompanion";
    case ErrorCode::not_admissible: return "NotAdmissible";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace qc
