#pragma once

#include <span>
#include <vector>

#include "quasicartan/int_matrix.hpp"

namespace qc {

// A skew-symmetrizable integer matrix B, together with its minimal
// positive symmetrizer d (d_i B_ij = -d_j B_ji, gcd 1 on every connected
// component of the diagram). Only obtainable through validate(), so every
// instance satisfies its invariants.
class ExchangeMatrix {
 public:
  static ExchangeMatrix validate(const IntMatrix& entries);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  std::span<const Int> symmetrizer() const noexcept { return symmetrizer_; }
  bool is_skew_symmetric() const noexcept { return skew_symmetric_; }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  ExchangeMatrix(IntMatrix entries, std::vector<Int> symmetrizer, bool skew)
      : entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)), skew_symmetric_(skew) {}

  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

  IntMatrix entries_;
  std::vector<Int> symmetrizer_;
  bool skew_symmetric_ = false;
};

// Matrix mutation at the 0-based vertex k.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

// Simultaneous row/column relabelling: result(i, j) = m(perm[i], perm[j]).
IntMatrix permute(const IntMatrix& m, std::span<const int> perm);

}  // namespace qc
