#include "quasicartan/int_matrix.hpp"

#include <sstream>

namespace qc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::invalid_argument, "matrix must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorCode::invalid_argument,
                  "matrix must be square: row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t(j, i) = m(i, j);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return c;
}

IntVector multiply(const IntMatrix& a, std::span<const Int> v) {
  if (a.size() != v.size()) throw Error(ErrorCode::dimension_mismatch, "matrix/vector sizes differ");
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a.row(i), v);
  return out;
}

Int dot(std::span<const Int> u, std::span<const Int> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::dimension_mismatch, "vector sizes differ");
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = checked_add(s, checked_mul(u[i], v[i]));
  return s;
}

IntMatrix from_columns(const std::vector<IntVector>& columns) {
  IntMatrix m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != columns.size())
      throw Error(ErrorCode::dimension_mismatch, "column length differs from column count");
    for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::string format_vector(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vectors(const std::vector<IntVector>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += format_vector(vs[i]);
  }
  return s + ")";
}

}  // namespace qc
