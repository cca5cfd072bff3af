#pragma once

#include <span>
#include <vector>

#include "quasicartan/exchange_matrix.hpp"

namespace qc {

// Throws zero_vector or mixed_signs.
Sign sign_of(std::span<const Int> c);

// A nonzero sign-coherent integer vector.
class CVector {
 public:
  explicit CVector(IntVector coords);

  const IntVector& coords() const noexcept { return coords_; }
  Sign sign() const noexcept { return sign_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const CVector& a, const CVector& b) { return a.coords_ == b.coords_; }

 private:
  IntVector coords_;
  Sign sign_;
};

class YSeed {
 public:
  YSeed(std::vector<CVector> cvectors, ExchangeMatrix b);

  std::size_t size() const noexcept { return b_.size(); }
  const std::vector<CVector>& cvectors() const noexcept { return c_; }
  const CVector& cvector(std::size_t i) const { return c_[i]; }
  const ExchangeMatrix& matrix() const noexcept { return b_; }
  std::vector<IntVector> coords() const;

  friend bool operator==(const YSeed&, const YSeed&) = default;

 private:
  std::vector<CVector> c_;
  ExchangeMatrix b_;
};

// Standard basis c-vectors paired with b0.
YSeed initial_seed(const ExchangeMatrix& b0);

// Throws SignCoherenceLost when the mutated tuple is not a Y-seed.
YSeed mutate_seed(const YSeed& s, int k);

struct WalkStep {
  int k = 0;
  YSeed seed;
};

struct WalkRecord {
  YSeed start;
  std::vector<WalkStep> steps;

  const YSeed& last() const { return steps.empty() ? start : steps.back().seed; }
};

// 0-based vertices. SignCoherenceLost carries the failing prefix.
WalkRecord apply_walk(const YSeed& s, std::span<const int> ks);

}  // namespace qc
