#pragma once

#include <optional>
#include <span>
#include <vector>

#include "quasicartan/exchange_matrix.hpp"

namespace qc {

// Generalized Cartan matrix of an acyclic exchange matrix: 2 on the
// diagonal, -|B_ij| off it. The symmetrizer is shared with B; the
// invariant bilinear form has Gram matrix D·A.
class CartanMatrix {
 public:
  const IntMatrix& entries() const noexcept { return a_; }
  std::span<const Int> symmetrizer() const noexcept { return d_; }
  std::size_t size() const noexcept { return a_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  bool is_symmetric() const noexcept { return symmetric_; }
  // D·A
  const IntMatrix& gram() const noexcept { return gram_; }

 private:
  CartanMatrix(IntMatrix a, std::vector<Int> d);
  friend CartanMatrix cartan_of(const ExchangeMatrix& b0);

  IntMatrix a_;
  std::vector<Int> d_;
  IntMatrix gram_;
  bool symmetric_ = true;
};

// Throws not_acyclic when Γ(b0) has an oriented cycle.
CartanMatrix cartan_of(const ExchangeMatrix& b0);

// uᵀ D A0 v; equals uᵀ A0 v when A0 is symmetric.
Int bilinear(const CartanMatrix& a0, std::span<const Int> u, std::span<const Int> v);

// Sum of |coords|.
Int height(std::span<const Int> v);

// s_i(v) = v - (A0 v)_i α_i, the linear extension of s_i(α_j) = α_j - A_ij α_i.
IntVector reflect_simple(const CartanMatrix& a0, int i, std::span<const Int> v);

// s_c(v) = v - (2 (c, v) / (c, c)) c. For symmetric A0 requires (c, c) = 2;
// in the symmetrizable case (c, c) must be 2 d_i for some i and the
// coefficient integral. Throws not_unit_norm otherwise.
IntVector reflect_in_root(const CartanMatrix& a0, std::span<const Int> c, std::span<const Int> v);

enum class Verdict { yes, no, unknown };

struct RealRootCheck {
  Verdict verdict = Verdict::unknown;
  // For yes: v = sign · s_{word.back()} ··· s_{word.front()} (α_simple).
  int simple = -1;
  std::vector<int> word;
  Sign sign = Sign::positive;
  Int bound = 0;
};

// Height-bounded search over positive real roots. The default bound is
// max(height(v), 2n); with bound ≥ height(v) the answer is never unknown.
RealRootCheck is_real_root(const CartanMatrix& a0, std::span<const Int> v, std::optional<Int> height_bound = {});

// Applies the witness word; used to certify a yes.
IntVector replay_witness(const CartanMatrix& a0, const RealRootCheck& check);

}  // namespace qc
