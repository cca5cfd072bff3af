#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quasicartan/exchange_matrix.hpp"

namespace qc {

// Undirected edge {a, b} with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  static Edge of(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arrow {
  int from = 0;
  int to = 0;
  Int weight = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// The weighted directed graph Γ(B): arrow i→j iff B(j, i) > 0, with
// weight |B(i, j) B(j, i)|.
class Diagram {
 public:
  explicit Diagram(std::size_t n = 0) : n_(n), weight_(n), neighbours_(n) {}
  explicit Diagram(const ExchangeMatrix& b);

  // Throws invalid_argument on self-loops or two arrows on one pair.
  static Diagram from_arrows(std::size_t n, std::span<const Arrow> arrows);

  std::size_t size() const noexcept { return n_; }
  bool has_arrow(int from, int to) const { return weight_(idx(from), idx(to)) > 0; }
  bool adjacent(int u, int v) const { return has_arrow(u, v) || has_arrow(v, u); }
  Int arrow_weight(int from, int to) const { return weight_(idx(from), idx(to)); }
  const std::vector<int>& neighbours(int v) const { return neighbours_[idx(v)]; }

  // Sorted lexicographically by (from, to).
  std::vector<Arrow> arrows() const;
  // Sorted; one per adjacent pair.
  std::vector<Edge> edges() const;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  void add_arrow(int from, int to, Int w);

  std::size_t n_ = 0;
  IntMatrix weight_;
  std::vector<std::vector<int>> neighbours_;
};

// An induced (chordless) cycle, listed in cyclic order starting from its
// smallest vertex and continuing towards the smaller of its two neighbours.
struct Cycle {
  std::vector<int> vertices;
  bool oriented = false;

  std::vector<int> vertex_set() const;
  std::vector<Edge> edges() const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_acyclic(const Diagram& d);

// Every chordless cycle of length ≥ 3, ordered by sorted vertex set.
std::vector<Cycle> chordless_cycles(const Diagram& d);

// Visits every simple directed path with 2..max_len vertices.
void for_each_directed_path(const Diagram& d, std::size_t max_len,
                            const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> directed_paths(const Diagram& d, std::size_t max_len);

// True when no two non-consecutive vertices of the path are adjacent.
bool is_induced_path(const Diagram& d, std::span<const int> path);

}  // namespace qc
