#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quasicartan/companion.hpp"

namespace qc {

enum class Check {
  sign_coherence,
  real_root_norm,
  real_root_certified,
  companion_identity,
  cvector_sign_rules,
  cycle_positive_counts,
  path_property,
  admissible,
  admissible_cut,
  epsilon_commutation,
  reflection_identity,
  sign_flip_pair,
  epsilon_inverse,
  triangle_criterion,
  admissible_preservation,
  arithmetic,
};

std::string_view to_string(Check c);
std::optional<Check> check_from_string(std::string_view s);

enum class Outcome { pass, fail, unknown };

struct Replay {
  IntMatrix b0;
  std::vector<int> walk;  // 0-based prefix that reproduces the finding
};

// A failed or indeterminate check. Passing checks only appear in the tallies.
struct Finding {
  std::size_t trial = 0;
  std::size_t step = 0;  // number of mutations applied before the checked state
  Check check = Check::sign_coherence;
  Outcome outcome = Outcome::fail;
  std::string detail;
  Replay replay;
};

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
  friend bool operator==(const Tally&, const Tally&) = default;
};

struct VerificationReport {
  std::string mode;  // "walk", "fuzz" or "conjecture"
  bool experimental = false;
  IntMatrix b0;
  std::vector<std::vector<int>> walks;  // 0-based, one per trial
  std::optional<std::uint64_t> seed;
  std::size_t depth = 0;
  std::size_t trials = 0;
  std::map<Check, Tally> tallies;
  std::vector<Finding> findings;  // sorted by (trial, step)

  std::size_t failures() const;
  std::size_t unknowns() const;
  bool clean() const { return failures() == 0 && unknowns() == 0; }
  void merge(VerificationReport&& other);
};

// Replays ks (0-based) from the standard-basis seed of b0 and checks every
// step. Throws not_acyclic / not_skew_symmetric on bad input; check failures
// become findings. `experimental` admits skew-symmetrizable b0.
VerificationReport verify_walk(const ExchangeMatrix& b0, std::span<const int> ks, bool experimental = false);

struct PropPmResult {
  bool flip_pair = true;  // μ^{+1}_k(A) and μ^{-1}_k(A) differ by negating row and column k
  bool inverse = true;    // μ^{-ε}_k undoes μ^ε_k whenever the latter is a companion of μ_k(B)
  std::string detail;

  bool pass() const noexcept { return flip_pair && inverse; }
};

// Both sign-flip clauses for one (A, B, k), checked for both ε.
PropPmResult verify_prop_pm(const QuasiCartan& a, const ExchangeMatrix& b, int k);

// Uniform walk of the given length that never repeats the previous vertex
// (when n > 1), drawn from the per-trial stream of `seed`.
std::vector<int> random_walk(std::size_t n, std::size_t depth, std::uint64_t seed, std::size_t trial);

VerificationReport fuzz(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials, std::uint64_t seed,
                        unsigned threads = 1);

// Same checks as fuzz for skew-symmetrizable b0, labelled experimental.
VerificationReport conjecture_search(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials,
                                     std::uint64_t seed, unsigned threads = 1);

}  // namespace qc
