#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qc {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  not_sign_skew_symmetric,
  no_symmetrizer,
  not_skew_symmetric,
  overflow,
  bounds_exceeded,
  zero_vector,
  mixed_signs,
  sign_coherence_lost,
  not_acyclic,
  not_unit_norm,
  not_a_companion,
  not_admissible,
  dimension_mismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by Y-seed mutation when a mutated c-vector has mixed signs. The
// prefix holds the 0-based walk up to and including the failing step.
class SignCoherenceLost : public Error {
 public:
  SignCoherenceLost(const std::string& what, std::vector<int> prefix)
      : Error(ErrorCode::sign_coherence_lost, what), prefix_(std::move(prefix)) {}

  const std::vector<int>& prefix() const noexcept { return prefix_; }

 private:
  std::vector<int> prefix_;
};

}  // namespace qc
