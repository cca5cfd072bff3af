#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasicartan/diagram.hpp"
#include "quasicartan/exchange_matrix.hpp"
#include "quasicartan/rootsys.hpp"
#include "quasicartan/yseed.hpp"

namespace qc {

// A quasi-Cartan matrix: diagonal 2, sign-symmetric. Whether it is a
// companion of a particular B is checked by is_companion_of.
class QuasiCartan {
 public:
  // Throws invalid_argument unless the diagonal is 2 and sgn(A_ij) = sgn(A_ji).
  explicit QuasiCartan(IntMatrix a);

  const IntMatrix& entries() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

  friend bool operator==(const QuasiCartan&, const QuasiCartan&) = default;

 private:
  IntMatrix a_;
};

// Diagonal 2, |A_ij| = |B_ij|, sign symmetry and d_i A_ij = d_j A_ji.
bool is_companion_of(const IntMatrix& a, const ExchangeMatrix& b);

// Positive entries of A on the edges of Γ(B), i.e. the edges {i, j} with A_ij > 0.
std::vector<Edge> positive_edges(const QuasiCartan& a, const ExchangeMatrix& b);

// The unchecked matrix (c_i, c_j) / d_i under the form D·A0. Throws
// not_a_companion when an entry is not integral.
IntMatrix cvector_gram(const CartanMatrix& a0, const YSeed& s);

// A_ij = (c_i, c_j) / d_i with the form D·A0; for symmetric A0 this is
// c_iᵀ A0 c_j. Verifies companion-hood and the c-vector sign rules on every
// edge; throws not_a_companion naming the first violated entry.
QuasiCartan companion_from_cvectors(const CartanMatrix& a0, const YSeed& s);

// The two sign rules relating c_jᵀ A0 c_i to B_ji. Returns a description of
// the first violation, if any.
std::optional<std::string> check_cvector_sign_rules(const IntMatrix& a, const YSeed& s);

struct EpsilonMutation {
  IntMatrix matrix;
  bool is_companion = false;  // of μ_k(B)
};

EpsilonMutation epsilon_mutate(const QuasiCartan& a, const ExchangeMatrix& b, int k, Sign eps);

// Every triangle of Γ(B) containing a directed path i → k → j has an odd
// (oriented) or even (non-oriented) number of positive edges. Holds exactly
// when epsilon_mutate at k yields a companion of μ_k(B), for either ε.
bool triangle_condition(const QuasiCartan& a, const ExchangeMatrix& b, int k);

struct AdmissibilityResult {
  bool admissible = true;
  std::optional<Cycle> witness;
};

AdmissibilityResult is_admissible(const QuasiCartan& a, const ExchangeMatrix& b);

// Induced directed paths (as vertex lists) carrying two or more positive edges.
// A path with a chord between non-consecutive vertices is not a subdiagram and is skipped.
std::vector<std::vector<int>> check_path_property(const QuasiCartan& a, const ExchangeMatrix& b,
                                                   std::optional<std::size_t> max_len = {});

// Number of positive edges on a cycle.
std::size_t positive_count(const QuasiCartan& a, const Cycle& c);

// Sorted edge list. Throws not_admissible when A is not admissible or its
// positive edges do not form an admissible cut.
std::vector<Edge> admissible_cut(const QuasiCartan& a, const ExchangeMatrix& b);

// Whether an edge set meets each oriented chordless cycle exactly once and
// each non-oriented one an even number of times.
bool is_admissible_cut(const Diagram& d, std::span<const Edge> cut);

QuasiCartan sign_change(const QuasiCartan& a, std::span<const Sign> sigma);

// σ with sign_change(a1, σ) = a2, fixing σ = +1 at the smallest vertex of
// every connected component. Throws dimension_mismatch on size mismatch.
std::optional<std::vector<Sign>> sign_equivalent(const QuasiCartan& a1, const QuasiCartan& a2);

struct ParityEquation {
  Cycle cycle;
  int parity = 0;  // 1 for oriented cycles
};

struct CompanionDecision {
  std::optional<QuasiCartan> companion;
  // When no companion exists: chordless-cycle equations whose sum over
  // GF(2) reads 0 = 1.
  std::vector<ParityEquation> certificate;
  // Set when the exhaustive sign search was run and agreed.
  bool cross_checked = false;
};

inline constexpr std::size_t kExhaustiveEdgeLimit = 20;

// Solves one parity equation per chordless cycle for the signs of the -|B_ij|
// baseline. When Γ(B) has at most `exhaustive_limit` edges, the answer is
// checked against exhaustive_admissible_companions.
CompanionDecision find_admissible_companion(const ExchangeMatrix& b,
                                            std::size_t exhaustive_limit = kExhaustiveEdgeLimit);

// Brute force over all 2^#edges sign choices with a direct admissibility
// check. Stops after `limit` matches. Throws invalid_argument beyond 62 edges.
std::vector<QuasiCartan> exhaustive_admissible_companions(const ExchangeMatrix& b,
                                                          std::size_t limit = static_cast<std::size_t>(-1));

// e'_k = -e_k; e'_i = e_i - A_ki e_k when ε B_ki > 0; e'_i = e_i otherwise.
std::vector<IntVector> mutate_basis(const std::vector<IntVector>& basis, const QuasiCartan& a,
                                    const ExchangeMatrix& b, int k, Sign eps);

}  // namespace qc
