#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quasicartan/exchange_matrix.hpp"

namespace qc {

// Largest dimension accepted by canonical_form (n! permutations are tried).
inline constexpr std::size_t kMaxCanonicalSize = 8;

// Lexicographic minimum of the row-major encoding of P B Pᵀ over all
// permutations P.
IntMatrix canonical_form(const IntMatrix& m);

struct AcyclicWitness {
  std::vector<int> walk;  // 0-based mutation sequence from the input matrix
  IntMatrix matrix;       // the acyclic matrix it reaches
};

struct MutationClassReport {
  std::vector<IntMatrix> representatives;  // canonical forms, sorted
  std::optional<AcyclicWitness> acyclic;
  std::size_t max_class_size = 0;
  std::size_t max_depth = 0;
  std::size_t depth_reached = 0;
  bool complete = false;  // false: bounds were hit before the class closed

  std::size_t class_size() const noexcept { return representatives.size(); }
};

class BoundsExceeded : public Error {
 public:
  BoundsExceeded(const std::string& what, MutationClassReport partial)
      : Error(ErrorCode::bounds_exceeded, what), partial_(std::move(partial)) {}
  const MutationClassReport& partial() const noexcept { return partial_; }

 private:
  MutationClassReport partial_;
};

// Breadth-first closure of {B} under matrix mutation, modulo simultaneous
// permutation. Throws BoundsExceeded (with the partial report) when the
// class does not close within the bounds.
MutationClassReport mutation_class(const ExchangeMatrix& b, std::size_t max_class_size, std::size_t max_depth);

}  // namespace qc
