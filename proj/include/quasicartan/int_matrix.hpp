#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quasicartan/integer.hpp"

namespace qc {

using IntVector = std::vector<Int>;

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  // Throws invalid_argument unless every row has rows.size() entries.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t size() const noexcept { return n_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const Int> data() const noexcept { return data_; }

  std::vector<std::vector<Int>> rows() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Int> v);
Int dot(std::span<const Int> u, std::span<const Int> v);

// Matrix whose columns are the given vectors.
IntMatrix from_columns(const std::vector<IntVector>& columns);

// "(1,-1,0)" and "((1,0),(0,1))" renderings used by the CLI.
std::string format_vector(std::span<const Int> v);
std::string format_vectors(const std::vector<IntVector>& vs);

}  // namespace qc
