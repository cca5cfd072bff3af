#include "quasicartan/exchange_matrix.hpp"

#include <numeric>
#include <queue>

namespace qc {

namespace {

struct Ratio {
  Int num = 1;
  Int den = 1;
};

Ratio reduced(Int num, Int den) {
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "B[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

void check_sign_pattern(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0)
      throw Error(ErrorCode::not_sign_skew_symmetric, "nonzero diagonal entry " + entry_name(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(m(i, j)) != -sgn(m(j, i)))
        throw Error(ErrorCode::not_sign_skew_symmetric,
                    "sign pattern violated at " + entry_name(i, j) + "=" + std::to_string(m(i, j)) +
                        ", " + entry_name(j, i) + "=" + std::to_string(m(j, i)));
    }
  }
}

// Propagates d_j / d_i = |B_ij| / |B_ji| over each connected component; an
// inconsistent ratio around some cycle means no symmetrizer exists.
std::vector<Int> minimal_symmetrizer(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Ratio> ratio(n);
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int c = components++;
    component[root] = c;
    ratio[root] = {1, 1};
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || m(i, j) == 0) continue;
        const Ratio rj = reduced(checked_mul(ratio[i].num, checked_abs(m(i, j))),
                                 checked_mul(ratio[i].den, checked_abs(m(j, i))));
        if (component[j] < 0) {
          component[j] = c;
          ratio[j] = rj;
          queue.push(j);
        } else if (rj.num != ratio[j].num || rj.den != ratio[j].den) {
          throw Error(ErrorCode::no_symmetrizer,
                      "no positive integral symmetrizer: inconsistent cycle product through " +
                          entry_name(i, j));
        }
      }
    }
  }
  std::vector<Int> d(n);
  for (int c = 0; c < components; ++c) {
    Int lcm = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) lcm = checked_mul(lcm / std::gcd(lcm, ratio[i].den), ratio[i].den);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) {
        d[i] = checked_mul(ratio[i].num, lcm / ratio[i].den);
        g = std::gcd(g, d[i]);
      }
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == c) d[i] /= g;
  }
  return d;
}

}  // namespace

ExchangeMatrix ExchangeMatrix::validate(const IntMatrix& entries) {
  if (entries.size() == 0) throw Error(ErrorCode::invalid_argument, "exchange matrix must be nonempty");
  check_sign_pattern(entries);
  std::vector<Int> d = minimal_symmetrizer(entries);
  bool skew = true;
  for (std::size_t i = 0; i < entries.size() && skew; ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries(i, j) != -entries(j, i)) {
        skew = false;
        break;
      }
  return ExchangeMatrix(entries, std::move(d), skew);
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  const std::size_t n = b.size();
  if (k < 0 || static_cast<std::size_t>(k) >= n)
    throw Error(ErrorCode::invalid_argument, "mutation vertex out of range");
  const auto kk = static_cast<std::size_t>(k);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int bij = b(i, j);
      if (i == kk || j == kk) {
        out(i, j) = checked_neg(bij);
        continue;
      }
      const Int bik = b(i, kk), bkj = b(kk, j);
      Int v = bij;
      v = checked_add(v, checked_mul(positive_part(bik), positive_part(bkj)));
      v = checked_sub(v, checked_mul(positive_part(checked_neg(bik)), positive_part(checked_neg(bkj))));
      out(i, j) = v;
    }
  // Mutation keeps the symmetrizer and the connected components.
  const auto d = b.symmetrizer();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (checked_mul(d[i], out(i, j)) != checked_neg(checked_mul(d[j], out(j, i))))
        throw Error(ErrorCode::not_sign_skew_symmetric, "mutation broke skew-symmetrizability");
  return ExchangeMatrix(std::move(out), std::vector<Int>(d.begin(), d.end()), b.is_skew_symmetric());
}

IntMatrix permute(const IntMatrix& m, std::span<const int> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n) throw Error(ErrorCode::dimension_mismatch, "permutation size differs");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j]));
  return out;
}

}  // namespace qc
