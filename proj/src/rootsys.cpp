#include "quasicartan/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "quasicartan/diagram.hpp"

namespace qc {

CartanMatrix::CartanMatrix(IntMatrix a, std::vector<Int> d) : a_(std::move(a)), d_(std::move(d)), gram_(a_.size()) {
  symmetric_ = a_.is_symmetric();
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < a_.size(); ++j) gram_(i, j) = checked_mul(d_[i], a_(i, j));
}

CartanMatrix cartan_of(const ExchangeMatrix& b0) {
  if (!is_acyclic(Diagram(b0))) throw Error(ErrorCode::not_acyclic, "diagram has an oriented cycle");
  const std::size_t n = b0.size();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = i == j ? 2 : checked_neg(checked_abs(b0(i, j)));
  const auto d = b0.symmetrizer();
  return CartanMatrix(std::move(a), std::vector<Int>(d.begin(), d.end()));
}

Int bilinear(const CartanMatrix& a0, std::span<const Int> u, std::span<const Int> v) {
  if (u.size() != a0.size() || v.size() != a0.size()) throw Error(ErrorCode::dimension_mismatch, "root vector size");
  return dot(u, multiply(a0.gram(), v));
}

Int height(std::span<const Int> v) {
  Int h = 0;
  for (Int x : v) h = checked_add(h, checked_abs(x));
  return h;
}

IntVector reflect_simple(const CartanMatrix& a0, int i, std::span<const Int> v) {
  if (i < 0 || static_cast<std::size_t>(i) >= a0.size()) throw Error(ErrorCode::invalid_argument, "reflection index");
  if (v.size() != a0.size()) throw Error(ErrorCode::dimension_mismatch, "root vector size");
  IntVector out(v.begin(), v.end());
  const auto ii = static_cast<std::size_t>(i);
  out[ii] = checked_sub(out[ii], dot(a0.entries().row(ii), v));
  return out;
}

IntVector reflect_in_root(const CartanMatrix& a0, std::span<const Int> c, std::span<const Int> v) {
  const Int norm = bilinear(a0, c, c);
  bool ok = false;
  if (a0.is_symmetric()) {
    ok = norm == 2;
  } else {
    for (Int d : a0.symmetrizer()) ok = ok || norm == 2 * d;
  }
  const Int twice = checked_mul(2, bilinear(a0, c, v));
  if (!ok || twice % norm != 0)
    throw Error(ErrorCode::not_unit_norm, "reflection root " + format_vector(c) + " has norm " + std::to_string(norm));
  const Int coef = twice / norm;
  IntVector out(v.begin(), v.end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked_sub(out[j], checked_mul(coef, c[j]));
  return out;
}

namespace {

bool norm_is_admissible(const CartanMatrix& a0, Int norm) {
  if (a0.is_symmetric()) return norm == 2;
  return std::any_of(a0.symmetrizer().begin(), a0.symmetrizer().end(), [&](Int d) { return norm == 2 * d; });
}

}  // namespace

// Every positive real root other than a simple root has a simple reflection
// lowering its height, so ascending from the simple roots while staying
// below the bound reaches every positive real root of height ≤ bound.
RealRootCheck is_real_root(const CartanMatrix& a0, std::span<const Int> v, std::optional<Int> height_bound) {
  const std::size_t n = a0.size();
  if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "root vector size");
  RealRootCheck result;
  const Int h = height(v);
  result.bound = height_bound.value_or(std::max<Int>(h, static_cast<Int>(2 * n)));

  const bool any_pos = std::any_of(v.begin(), v.end(), [](Int x) { return x > 0; });
  const bool any_neg = std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; });
  if ((any_pos && any_neg) || (!any_pos && !any_neg) || !norm_is_admissible(a0, bilinear(a0, v, v))) {
    result.verdict = Verdict::no;
    return result;
  }
  result.sign = any_pos ? Sign::positive : Sign::negative;
  IntVector target(v.begin(), v.end());
  if (any_neg)
    for (Int& x : target) x = -x;

  if (h > result.bound) {
    result.verdict = Verdict::unknown;
    return result;
  }

  struct Origin {
    int simple;
    std::vector<int> word;
  };
  std::map<IntVector, Origin> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.emplace(e, Origin{static_cast<int>(i), {}});
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    IntVector r = std::move(queue.front());
    queue.pop_front();
    if (r == target) break;
    const Int hr = height(r);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector s = reflect_simple(a0, static_cast<int>(i), r);
      const Int hs = height(s);
      if (hs <= hr || hs > result.bound || seen.contains(s)) continue;
      Origin o = seen.at(r);
      o.word.push_back(static_cast<int>(i));
      seen.emplace(s, std::move(o));
      queue.push_back(std::move(s));
    }
  }
  const auto it = seen.find(target);
  if (it == seen.end()) {
    result.verdict = Verdict::no;
    return result;
  }
  result.verdict = Verdict::yes;
  result.simple = it->second.simple;
  result.word = it->second.word;
  return result;
}

IntVector replay_witness(const CartanMatrix& a0, const RealRootCheck& check) {
  if (check.verdict != Verdict::yes) throw Error(ErrorCode::invalid_argument, "no witness to replay");
  IntVector r(a0.size(), 0);
  r[static_cast<std::size_t>(check.simple)] = 1;
  for (int i : check.word) r = reflect_simple(a0, i, r);
  if (check.sign == Sign::negative)
    for (Int& x : r) x = -x;
  return r;
}

}  // namespace qc
