#pragma once

#include <vector>

#include "oracles.hpp"
#include "quasicartan/int_matrix.hpp"

namespace testing_support {

inline qc::IntMatrix to_matrix(const oracle::Mat& m) {
  std::vector<std::vector<qc::Int>> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return qc::IntMatrix::from_rows(rows);
}

inline oracle::Mat to_mat(const qc::IntMatrix& m) {
  oracle::Mat out(m.size(), oracle::Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace testing_support
