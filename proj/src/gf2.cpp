#include "quasicartan/gf2.hpp"

#include <bit>

#include "quasicartan/error.hpp"

namespace qc::gf2 {

bool BitRow::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

std::optional<std::size_t> BitRow::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

struct Row {
  BitRow lhs;
  bool rhs;
  BitRow history;  // which input equations were summed into this row
};

struct Elimination {
  Solution solution;
  std::optional<BitRow> contradiction;  // history of an inconsistent row
};

// Gauss-Jordan elimination.
Elimination eliminate(const std::vector<Equation>& system, std::size_t variables) {
  std::vector<Row> rows;
  rows.reserve(system.size());
  for (std::size_t e = 0; e < system.size(); ++e) {
    BitRow h(system.size());
    h.set(e);
    rows.push_back({system[e].lhs, system[e].rhs, std::move(h)});
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < variables && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && !rows[pick].lhs.test(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || !rows[r].lhs.test(col)) continue;
      rows[r].lhs ^= rows[rank].lhs;
      rows[r].rhs ^= rows[rank].rhs;
      rows[r].history ^= rows[rank].history;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].rhs) return {Solution(variables), rows[r].history};
  Solution x(variables);
  for (std::size_t r = 0; r < rank; ++r) x.set(pivot_col[r], rows[r].rhs);
  return {std::move(x), std::nullopt};
}

}  // namespace

std::variant<Solution, Infeasible> solve(const std::vector<Equation>& system, std::size_t variables) {
  for (const Equation& e : system)
    if (e.lhs.size() != variables) throw Error(ErrorCode::dimension_mismatch, "equation width differs from variable count");

  Elimination first = eliminate(system, variables);
  if (!first.contradiction) return std::move(first.solution);

  // Shrink the support of the contradiction: drop equations one at a time as
  // long as what remains is still inconsistent.
  const BitRow& history = *first.contradiction;
  std::vector<std::size_t> support;
  for (std::size_t e = 0; e < system.size(); ++e)
    if (history.test(e)) support.push_back(e);
  for (std::size_t i = 0; i < support.size();) {
    std::vector<Equation> trial;
    std::vector<std::size_t> trial_idx;
    for (std::size_t j = 0; j < support.size(); ++j)
      if (j != i) {
        trial.push_back(system[support[j]]);
        trial_idx.push_back(support[j]);
      }
    const Elimination r = eliminate(trial, variables);
    if (const auto& h = r.contradiction) {
      std::vector<std::size_t> smaller;
      for (std::size_t j = 0; j < trial_idx.size(); ++j)
        if (h->test(j)) smaller.push_back(trial_idx[j]);
      support = std::move(smaller);
      i = 0;
    } else {
      ++i;
    }
  }
  return Infeasible{std::move(support)};
}

}  // namespace qc::gf2
