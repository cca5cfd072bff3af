#include "quasicartan/yseed.hpp"

namespace qc {

Sign sign_of(std::span<const Int> c) {
  bool pos = false, neg = false;
  for (Int x : c) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  if (pos && neg) throw Error(ErrorCode::mixed_signs, "vector " + format_vector(c) + " has mixed signs");
  if (!pos && !neg) throw Error(ErrorCode::zero_vector, "zero c-vector");
  return pos ? Sign::positive : Sign::negative;
}

CVector::CVector(IntVector coords) : coords_(std::move(coords)), sign_(sign_of(coords_)) {}

YSeed::YSeed(std::vector<CVector> cvectors, ExchangeMatrix b) : c_(std::move(cvectors)), b_(std::move(b)) {
  if (c_.size() != b_.size()) throw Error(ErrorCode::dimension_mismatch, "c-vector count differs from matrix size");
  for (const CVector& c : c_)
    if (c.size() != b_.size()) throw Error(ErrorCode::dimension_mismatch, "c-vector length differs from matrix size");
}

std::vector<IntVector> YSeed::coords() const {
  std::vector<IntVector> out;
  out.reserve(c_.size());
  for (const CVector& c : c_) out.push_back(c.coords());
  return out;
}

YSeed initial_seed(const ExchangeMatrix& b0) {
  std::vector<CVector> c;
  for (std::size_t i = 0; i < b0.size(); ++i) {
    IntVector e(b0.size(), 0);
    e[i] = 1;
    c.emplace_back(std::move(e));
  }
  return YSeed(std::move(c), b0);
}

YSeed mutate_seed(const YSeed& s, int k) {
  const std::size_t n = s.size();
  if (k < 0 || static_cast<std::size_t>(k) >= n) throw Error(ErrorCode::invalid_argument, "mutation vertex out of range");
  const auto kk = static_cast<std::size_t>(k);
  const CVector& ck = s.cvector(kk);
  std::vector<CVector> next;
  next.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v = s.cvector(i).coords();
    if (i == kk) {
      for (Int& x : v) x = checked_neg(x);
    } else {
      const Int coef = positive_part(checked_mul(to_int(ck.sign()), s.matrix()(kk, i)));
      if (coef != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] = checked_add(v[j], checked_mul(coef, ck[j]));
    }
    try {
      next.emplace_back(std::move(v));
    } catch (const Error& e) {
      throw SignCoherenceLost("mutation at " + std::to_string(k + 1) + " breaks sign coherence of c-vector " +
                                  std::to_string(i + 1) + ": " + e.what(),
                              {k});
    }
  }
  return YSeed(std::move(next), mutate_matrix(s.matrix(), k));
}

WalkRecord apply_walk(const YSeed& s, std::span<const int> ks) {
  WalkRecord rec{s, {}};
  rec.steps.reserve(ks.size());
  for (std::size_t t = 0; t < ks.size(); ++t) {
    try {
      rec.steps.push_back({ks[t], mutate_seed(rec.last(), ks[t])});
    } catch (const SignCoherenceLost& e) {
      throw SignCoherenceLost(e.what(), std::vector<int>(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(t + 1)));
    }
  }
  return rec;
}

}  // namespace qc
