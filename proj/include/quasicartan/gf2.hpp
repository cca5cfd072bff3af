#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace qc::gf2 {

// Fixed-width bit row.
class BitRow {
 public:
  explicit BitRow(std::size_t bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  bool any() const;
  std::optional<std::size_t> first_set() const;
  std::size_t count() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

struct Equation {
  BitRow lhs;
  bool rhs = false;
};

// Indices (into the equation list) whose sum reads 0 = 1. Minimal under
// inclusion: dropping any one of them leaves a consistent system.
struct Infeasible {
  std::vector<std::size_t> equations;
};

// x with lhs·x = rhs for every equation; free variables are set to 0.
using Solution = BitRow;

std::variant<Solution, Infeasible> solve(const std::vector<Equation>& system, std::size_t variables);

}  // namespace qc::gf2
