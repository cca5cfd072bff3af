#include "quasicartan/companion.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <variant>

#include "quasicartan/gf2.hpp"

namespace qc {

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void require_companion(const QuasiCartan& a, const ExchangeMatrix& b) {
  if (!is_companion_of(a.entries(), b))
    throw Error(ErrorCode::not_a_companion, "matrix is not a quasi-Cartan companion of B");
}

}  // namespace

QuasiCartan::QuasiCartan(IntMatrix a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_(i, i) != 2) throw Error(ErrorCode::invalid_argument, "quasi-Cartan diagonal entry " + at(i, i) + " is not 2");
    for (std::size_t j = i + 1; j < a_.size(); ++j)
      if (sgn(a_(i, j)) != sgn(a_(j, i)))
        throw Error(ErrorCode::invalid_argument, "quasi-Cartan matrix is not sign-symmetric at " + at(i, j));
  }
}

bool is_companion_of(const IntMatrix& a, const ExchangeMatrix& b) {
  if (a.size() != b.size()) return false;
  const auto d = b.symmetrizer();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i, i) != 2) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      if (checked_abs(a(i, j)) != checked_abs(b(i, j))) return false;
      if (sgn(a(i, j)) != sgn(a(j, i))) return false;
      if (checked_mul(d[i], a(i, j)) != checked_mul(d[j], a(j, i))) return false;
    }
  }
  return true;
}

std::vector<Edge> positive_edges(const QuasiCartan& a, const ExchangeMatrix& b) {
  std::vector<Edge> out;
  for (const Edge& e : Diagram(b).edges())
    if (a(idx(e.a), idx(e.b)) > 0) out.push_back(e);
  return out;
}

std::optional<std::string> check_cvector_sign_rules(const IntMatrix& a, const YSeed& s) {
  const ExchangeMatrix& b = s.matrix();
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i == j || b(j, i) == 0) continue;
      const int sj = to_int(s.cvector(j).sign()), si = to_int(s.cvector(i).sign());
      const Int mag = checked_abs(b(j, i));
      const Int expected = sgn(b(j, i)) == sj ? -mag : -si * sj * mag;
      if (a(j, i) != expected)
        return "sign rule violated at A" + at(j, i) + ": expected " + std::to_string(expected) + ", got " +
               std::to_string(a(j, i));
    }
  return std::nullopt;
}

IntMatrix cvector_gram(const CartanMatrix& a0, const YSeed& s) {
  const std::size_t n = s.size();
  if (a0.size() != n) throw Error(ErrorCode::dimension_mismatch, "Cartan matrix and seed sizes differ");
  const auto d = a0.symmetrizer();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int form = bilinear(a0, s.cvector(i).coords(), s.cvector(j).coords());
      if (form % d[i] != 0)
        throw Error(ErrorCode::not_a_companion, "non-integral companion entry A" + at(i, j));
      a(i, j) = form / d[i];
    }
  return a;
}

QuasiCartan companion_from_cvectors(const CartanMatrix& a0, const YSeed& s) {
  const std::size_t n = s.size();
  IntMatrix a = cvector_gram(a0, s);
  const ExchangeMatrix& b = s.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2)
      throw Error(ErrorCode::not_a_companion, "diagonal entry A" + at(i, i) + " = " + std::to_string(a(i, i)));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && checked_abs(a(i, j)) != checked_abs(b(i, j)))
        throw Error(ErrorCode::not_a_companion, "|A" + at(i, j) + "| = " + std::to_string(checked_abs(a(i, j))) +
                                                    " differs from |B" + at(i, j) + "| = " +
                                                    std::to_string(checked_abs(b(i, j))));
  }
  if (!is_companion_of(a, b)) throw Error(ErrorCode::not_a_companion, "sign symmetry or symmetrizability fails");
  if (auto violation = check_cvector_sign_rules(a, s)) throw Error(ErrorCode::not_a_companion, *violation);
  return QuasiCartan(std::move(a));
}

EpsilonMutation epsilon_mutate(const QuasiCartan& a, const ExchangeMatrix& b, int k, Sign eps) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::dimension_mismatch, "companion and matrix sizes differ");
  if (k < 0 || idx(k) >= n) throw Error(ErrorCode::invalid_argument, "mutation vertex out of range");
  const std::size_t kk = idx(k);
  const int e = to_int(eps);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = 2;
      } else if (j == kk) {
        out(i, j) = checked_mul(e * sgn(b(kk, i)), a(i, kk));
      } else if (i == kk) {
        out(i, j) = checked_mul(e * sgn(b(kk, j)), a(kk, j));
      } else {
        const Int term = positive_part(checked_mul(b(i, kk), b(kk, j)));
        const int s = sgn(a(i, kk)) * sgn(a(kk, j));
        out(i, j) = checked_sub(a(i, j), checked_mul(s, term));
      }
    }
  const bool companion = is_companion_of(out, mutate_matrix(b, k));
  return {std::move(out), companion};
}

bool triangle_condition(const QuasiCartan& a, const ExchangeMatrix& b, int k) {
  const Diagram d(b);
  const auto& nb = d.neighbours(k);
  for (std::size_t x = 0; x < nb.size(); ++x)
    for (std::size_t y = x + 1; y < nb.size(); ++y) {
      const int i = nb[x], j = nb[y];
      if (!d.adjacent(i, j)) continue;
      // Only triangles with a path i → k → j (or j → k → i) are touched by
      // the mutation; at a source or sink of the triangle A' agrees with A
      // up to sign on every edge.
      const bool through = (d.has_arrow(i, k) && d.has_arrow(k, j)) || (d.has_arrow(j, k) && d.has_arrow(k, i));
      if (!through) continue;
      const bool oriented = (d.has_arrow(k, i) && d.has_arrow(i, j) && d.has_arrow(j, k)) ||
                            (d.has_arrow(k, j) && d.has_arrow(j, i) && d.has_arrow(i, k));
      const int positives = (a(idx(k), idx(i)) > 0) + (a(idx(i), idx(j)) > 0) + (a(idx(j), idx(k)) > 0);
      if ((positives % 2 == 1) != oriented) return false;
    }
  return true;
}

std::size_t positive_count(const QuasiCartan& a, const Cycle& c) {
  std::size_t count = 0;
  for (const Edge& e : c.edges()) count += a(idx(e.a), idx(e.b)) > 0;
  return count;
}

AdmissibilityResult is_admissible(const QuasiCartan& a, const ExchangeMatrix& b) {
  require_companion(a, b);
  for (const Cycle& c : chordless_cycles(Diagram(b)))
    if ((positive_count(a, c) % 2 == 1) != c.oriented) return {false, c};
  return {};
}

std::vector<std::vector<int>> check_path_property(const QuasiCartan& a, const ExchangeMatrix& b,
                                                   std::optional<std::size_t> max_len) {
  require_companion(a, b);
  std::vector<std::vector<int>> violations;
  const std::size_t len = std::max<std::size_t>(2, max_len.value_or(b.size()));
  const Diagram d(b);
  for_each_directed_path(d, len, [&](std::span<const int> p) {
    if (!is_induced_path(d, p)) return;
    std::size_t positives = 0;
    for (std::size_t t = 0; t + 1 < p.size(); ++t) positives += a(idx(p[t]), idx(p[t + 1])) > 0;
    if (positives >= 2) violations.emplace_back(p.begin(), p.end());
  });
  return violations;
}

bool is_admissible_cut(const Diagram& d, std::span<const Edge> cut) {
  for (const Cycle& c : chordless_cycles(d)) {
    std::size_t hits = 0;
    for (const Edge& e : c.edges()) hits += std::find(cut.begin(), cut.end(), e) != cut.end();
    if (c.oriented ? hits != 1 : hits % 2 != 0) return false;
  }
  return true;
}

std::vector<Edge> admissible_cut(const QuasiCartan& a, const ExchangeMatrix& b) {
  const AdmissibilityResult adm = is_admissible(a, b);
  if (!adm.admissible) throw Error(ErrorCode::not_admissible, "companion is not admissible");
  std::vector<Edge> cut = positive_edges(a, b);
  if (!is_admissible_cut(Diagram(b), cut))
    throw Error(ErrorCode::not_admissible, "positive edges meet an oriented cycle more than once");
  return cut;
}

QuasiCartan sign_change(const QuasiCartan& a, std::span<const Sign> sigma) {
  const std::size_t n = a.size();
  if (sigma.size() != n) throw Error(ErrorCode::dimension_mismatch, "sign vector size differs");
  IntMatrix out = a.entries();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sigma[i] != sigma[j]) out(i, j) = checked_neg(out(i, j));
  return QuasiCartan(std::move(out));
}

std::optional<std::vector<Sign>> sign_equivalent(const QuasiCartan& a1, const QuasiCartan& a2) {
  const std::size_t n = a1.size();
  if (a2.size() != n) throw Error(ErrorCode::dimension_mismatch, "companion sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (checked_abs(a1(i, j)) != checked_abs(a2(i, j))) return std::nullopt;

  std::vector<std::optional<Sign>> sigma(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (sigma[root]) continue;
    sigma[root] = Sign::positive;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a1(i, j) == 0) continue;
        const Sign flip = a1(i, j) == a2(i, j) ? Sign::positive : Sign::negative;
        const Sign want = *sigma[i] * flip;
        if (!sigma[j]) {
          sigma[j] = want;
          queue.push_back(j);
        } else if (*sigma[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Sign> out;
  out.reserve(n);
  for (const auto& s : sigma) out.push_back(*s);
  return out;
}

namespace {

QuasiCartan baseline_with_signs(const ExchangeMatrix& b, const std::vector<Edge>& edges,
                                const std::vector<bool>& positive) {
  IntMatrix a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) a(i, j) = i == j ? 2 : checked_neg(checked_abs(b(i, j)));
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (positive[e]) {
      const std::size_t i = idx(edges[e].a), j = idx(edges[e].b);
      a(i, j) = checked_neg(a(i, j));
      a(j, i) = checked_neg(a(j, i));
    }
  return QuasiCartan(std::move(a));
}

std::size_t edge_index(const std::vector<Edge>& edges, const Edge& e) {
  return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
}

}  // namespace

std::vector<QuasiCartan> exhaustive_admissible_companions(const ExchangeMatrix& b, std::size_t limit) {
  const Diagram d(b);
  const std::vector<Edge> edges = d.edges();
  if (edges.size() > 62) throw Error(ErrorCode::invalid_argument, "too many edges for exhaustive search");
  struct Mask {
    std::uint64_t bits;
    bool odd;
  };
  std::vector<Mask> cycles;
  for (const Cycle& c : chordless_cycles(d)) {
    std::uint64_t m = 0;
    for (const Edge& e : c.edges()) m |= std::uint64_t{1} << edge_index(edges, e);
    cycles.push_back({m, c.oriented});
  }
  std::vector<QuasiCartan> out;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t x = 0; x < total && out.size() < limit; ++x) {
    bool ok = true;
    for (const Mask& c : cycles)
      if ((std::popcount(c.bits & x) % 2 == 1) != c.odd) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<bool> positive(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) positive[e] = (x >> e) & 1u;
    out.push_back(baseline_with_signs(b, edges, positive));
  }
  return out;
}

CompanionDecision find_admissible_companion(const ExchangeMatrix& b, std::size_t exhaustive_limit) {
  const Diagram d(b);
  const std::vector<Edge> edges = d.edges();
  const std::vector<Cycle> cycles = chordless_cycles(d);

  std::vector<gf2::Equation> system;
  system.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    gf2::Equation eq{gf2::BitRow(edges.size()), c.oriented};
    for (const Edge& e : c.edges()) eq.lhs.set(edge_index(edges, e));
    system.push_back(std::move(eq));
  }

  CompanionDecision decision;
  auto solved = gf2::solve(system, edges.size());
  if (const auto* x = std::get_if<gf2::Solution>(&solved)) {
    std::vector<bool> positive(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) positive[e] = x->test(e);
    QuasiCartan a = baseline_with_signs(b, edges, positive);
    if (!is_admissible(a, b).admissible)
      throw Error(ErrorCode::not_admissible, "parity solution failed the admissibility check");
    decision.companion = std::move(a);
  } else {
    for (std::size_t e : std::get<gf2::Infeasible>(solved).equations)
      decision.certificate.push_back({cycles[e], cycles[e].oriented ? 1 : 0});
  }

  if (edges.size() <= exhaustive_limit) {
    const bool exists = !exhaustive_admissible_companions(b, 1).empty();
    if (exists != decision.companion.has_value())
      throw Error(ErrorCode::not_admissible, "parity solver and exhaustive search disagree");
    decision.cross_checked = true;
  }
  return decision;
}

std::vector<IntVector> mutate_basis(const std::vector<IntVector>& basis, const QuasiCartan& a,
                                    const ExchangeMatrix& b, int k, Sign eps) {
  const std::size_t n = a.size();
  if (basis.size() != n || b.size() != n) throw Error(ErrorCode::dimension_mismatch, "basis size differs");
  if (k < 0 || idx(k) >= n) throw Error(ErrorCode::invalid_argument, "mutation vertex out of range");
  const std::size_t kk = idx(k);
  std::vector<IntVector> out = basis;
  for (Int& x : out[kk]) x = checked_neg(x);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == kk || to_int(eps) * b(kk, i) <= 0) continue;
    for (std::size_t t = 0; t < out[i].size(); ++t)
      out[i][t] = checked_sub(out[i][t], checked_mul(a(kk, i), basis[kk][t]));
  }
  return out;
}

}  // namespace qc
