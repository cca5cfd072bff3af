#include "quasicartan/verify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <random>

namespace qc {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 16> kCheckNames{{
    {Check::sign_coherence, "sign_coherence"},
    {Check::real_root_norm, "real_root_norm"},
    {Check::real_root_certified, "real_root_certified"},
    {Check::companion_identity, "companion_identity"},
    {Check::cvector_sign_rules, "cvector_sign_rules"},
    {Check::cycle_positive_counts, "cycle_positive_counts"},
    {Check::path_property, "path_property"},
    {Check::admissible, "admissible"},
    {Check::admissible_cut, "admissible_cut"},
    {Check::epsilon_commutation, "epsilon_commutation"},
    {Check::reflection_identity, "reflection_identity"},
    {Check::sign_flip_pair, "sign_flip_pair"},
    {Check::epsilon_inverse, "epsilon_inverse"},
    {Check::triangle_criterion, "triangle_criterion"},
    {Check::admissible_preservation, "admissible_preservation"},
    {Check::arithmetic, "arithmetic"},
}};

std::string vertex(int k) { return std::to_string(k + 1); }

std::string eps_name(Sign e) { return e == Sign::positive ? "+1" : "-1"; }

IntMatrix flip_row_col(const IntMatrix& m, std::size_t k) {
  IntMatrix out = m;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (j != k) {
      out(k, j) = checked_neg(out(k, j));
      out(j, k) = checked_neg(out(j, k));
    }
  return out;
}

// Accumulates outcomes for one walk.
class Recorder {
 public:
  Recorder(VerificationReport& report, std::size_t trial, const IntMatrix& b0, std::span<const int> walk)
      : report_(report), trial_(trial), b0_(b0), walk_(walk) {}

  void record(Check c, Outcome o, std::size_t step, std::size_t prefix, std::string detail = {}) {
    Tally& t = report_.tallies[c];
    switch (o) {
      case Outcome::pass: ++t.pass; return;
      case Outcome::fail: ++t.fail; break;
      case Outcome::unknown: ++t.unknown; break;
    }
    report_.findings.push_back(
        {trial_, step, c, o, std::move(detail), {b0_, std::vector<int>(walk_.begin(), walk_.begin() + static_cast<std::ptrdiff_t>(prefix))}});
  }

  void expect(Check c, bool ok, std::size_t step, std::size_t prefix, const std::string& detail) {
    record(c, ok ? Outcome::pass : Outcome::fail, step, prefix, ok ? std::string{} : detail);
  }

 private:
  VerificationReport& report_;
  std::size_t trial_;
  const IntMatrix& b0_;
  std::span<const int> walk_;
};

void check_state(Recorder& rec, const CartanMatrix& a0, const YSeed& seed, std::size_t step, Int bound) {
  const std::size_t n = seed.size();
  const ExchangeMatrix& b = seed.matrix();
  const auto d = a0.symmetrizer();

  rec.record(Check::sign_coherence, Outcome::pass, step, step);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector& c = seed.cvector(i).coords();
    const Int norm = bilinear(a0, c, c);
    rec.expect(Check::real_root_norm, norm == 2 * d[i], step, step,
               "c-vector " + std::to_string(i + 1) + " " + format_vector(c) + " has norm " + std::to_string(norm));
    const RealRootCheck rr = is_real_root(a0, c, bound);
    if (rr.verdict == Verdict::unknown) {
      rec.record(Check::real_root_certified, Outcome::unknown, step, step,
                 "c-vector " + std::to_string(i + 1) + " " + format_vector(c) + " beyond height bound " +
                     std::to_string(bound));
    } else {
      const bool ok = rr.verdict == Verdict::yes && replay_witness(a0, rr) == c;
      rec.expect(Check::real_root_certified, ok, step, step,
                 "c-vector " + std::to_string(i + 1) + " " + format_vector(c) + " is not a real root");
    }
  }

  const IntMatrix gram = cvector_gram(a0, seed);
  const bool companion = is_companion_of(gram, b);
  rec.expect(Check::companion_identity, companion, step, step, "c-vector Gram matrix is not a companion of B");
  const auto rule = check_cvector_sign_rules(gram, seed);
  rec.expect(Check::cvector_sign_rules, !rule, step, step, rule.value_or(""));
  if (!companion) return;
  const QuasiCartan a(gram);

  const Diagram diag(b);
  std::string cycle_detail;
  for (const Cycle& c : chordless_cycles(diag)) {
    const std::size_t p = positive_count(a, c);
    if (c.oriented ? p != 1 : p % 2 != 0) {
      cycle_detail = std::string(c.oriented ? "oriented" : "non-oriented") + " cycle with " + std::to_string(p) +
                     " positive edges";
      break;
    }
  }
  rec.expect(Check::cycle_positive_counts, cycle_detail.empty(), step, step, cycle_detail);

  const auto paths = check_path_property(a, b);
  rec.expect(Check::path_property, paths.empty(), step, step,
             paths.empty() ? "" : "directed path with several positive edges: " + format_vector(IntVector(paths.front().begin(), paths.front().end())));

  const AdmissibilityResult adm = is_admissible(a, b);
  rec.expect(Check::admissible, adm.admissible, step, step, "admissibility fails on a chordless cycle");

  bool cut_ok = false;
  try {
    cut_ok = is_admissible_cut(diag, admissible_cut(a, b));
  } catch (const Error&) {
  }
  rec.expect(Check::admissible_cut, cut_ok, step, step, "positive edges do not form an admissible cut");

  for (std::size_t kk = 0; kk < n; ++kk) {
    const int k = static_cast<int>(kk);
    const ExchangeMatrix mutated = mutate_matrix(b, k);
    const PropPmResult pm = verify_prop_pm(a, b, k);
    rec.expect(Check::sign_flip_pair, pm.flip_pair, step, step, pm.detail);
    rec.expect(Check::epsilon_inverse, pm.inverse, step, step, pm.detail);

    for (Sign eps : {Sign::positive, Sign::negative}) {
      const EpsilonMutation em = epsilon_mutate(a, b, k, eps);
      const std::string where = " at k=" + vertex(k) + ", eps=" + eps_name(eps);
      rec.expect(Check::triangle_criterion, em.is_companion == triangle_condition(a, b, k), step, step,
                 "triangle criterion disagrees with companion-hood" + where);
      bool preserved = em.is_companion;
      if (preserved) preserved = is_admissible(QuasiCartan(em.matrix), mutated).admissible;
      rec.expect(Check::admissible_preservation, !adm.admissible || preserved, step, step,
                 "mutation of an admissible companion is not an admissible companion" + where);
    }
  }
}

void check_transition(Recorder& rec, const CartanMatrix& a0, const YSeed& before, const YSeed& after, int k,
                      std::size_t step) {
  const auto kk = static_cast<std::size_t>(k);
  const Sign eps = before.cvector(kk).sign();
  const IntMatrix gram_before = cvector_gram(a0, before);
  const IntMatrix gram_after = cvector_gram(a0, after);
  if (is_companion_of(gram_before, before.matrix())) {
    const EpsilonMutation em = epsilon_mutate(QuasiCartan(gram_before), before.matrix(), k, eps);
    rec.expect(Check::epsilon_commutation, em.matrix == gram_after, step, step + 1,
               "companion of mutated seed differs from eps-mutation at k=" + vertex(k));
  }
  const IntVector& ck = before.cvector(kk).coords();
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after.cvector(i) == before.cvector(i)) continue;
    bool ok = false;
    std::string detail = "c-vector " + std::to_string(i + 1) + " is not the reflection image";
    try {
      ok = reflect_in_root(a0, ck, before.cvector(i).coords()) == after.cvector(i).coords();
    } catch (const Error& e) {
      detail = e.what();
    }
    rec.expect(Check::reflection_identity, ok, step, step + 1, detail);
  }
}

void run_walk(VerificationReport& report, std::size_t trial, const ExchangeMatrix& b0, const CartanMatrix& a0,
              std::span<const int> ks) {
  Recorder rec(report, trial, b0.entries(), ks);
  std::vector<YSeed> seeds{initial_seed(b0)};
  seeds.reserve(ks.size() + 1);
  for (std::size_t t = 0; t < ks.size(); ++t) {
    try {
      seeds.push_back(mutate_seed(seeds.back(), ks[t]));
    } catch (const SignCoherenceLost& e) {
      rec.record(Check::sign_coherence, Outcome::fail, t + 1, t + 1, e.what());
      break;
    } catch (const Error& e) {
      rec.record(Check::arithmetic, Outcome::fail, t + 1, t + 1, e.what());
      break;
    }
  }

  Int max_height = 0;
  for (const YSeed& s : seeds)
    for (const CVector& c : s.cvectors()) max_height = std::max(max_height, height(c.coords()));
  const Int bound = 4 * max_height;

  for (std::size_t t = 0; t < seeds.size(); ++t) {
    try {
      check_state(rec, a0, seeds[t], t, bound);
      if (t + 1 < seeds.size()) check_transition(rec, a0, seeds[t], seeds[t + 1], ks[t], t);
    } catch (const Error& e) {
      rec.record(Check::arithmetic, Outcome::fail, t, std::min(t + 1, ks.size()), e.what());
    }
  }
}

void require_verifiable(const ExchangeMatrix& b0, bool experimental) {
  if (!experimental && !b0.is_skew_symmetric())
    throw Error(ErrorCode::not_skew_symmetric, "initial matrix must be skew-symmetric");
  if (!is_acyclic(Diagram(b0))) throw Error(ErrorCode::not_acyclic, "initial diagram has an oriented cycle");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

VerificationReport random_trials(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials, std::uint64_t seed,
                                 unsigned threads, bool experimental) {
  require_verifiable(b0, experimental);
  const CartanMatrix a0 = cartan_of(b0);

  VerificationReport report;
  report.mode = experimental ? "conjecture" : "fuzz";
  report.experimental = experimental;
  report.b0 = b0.entries();
  report.seed = seed;
  report.depth = depth;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) report.walks.push_back(random_walk(b0.size(), depth, seed, t));

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  std::vector<std::future<VerificationReport>> parts;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = trials * w / threads, hi = trials * (w + 1) / threads;
    parts.push_back(std::async(std::launch::async, [&, lo, hi] {
      VerificationReport part;
      for (std::size_t t = lo; t < hi; ++t) run_walk(part, t, b0, a0, report.walks[t]);
      return part;
    }));
  }
  for (auto& p : parts) report.merge(p.get());
  return report;
}

}  // namespace

std::string_view to_string(Check c) {
  for (const auto& [id, name] : kCheckNames)
    if (id == c) return name;
  return "unknown";
}

std::optional<Check> check_from_string(std::string_view s) {
  for (const auto& [id, name] : kCheckNames)
    if (name == s) return id;
  return std::nullopt;
}

std::size_t VerificationReport::failures() const {
  std::size_t f = 0;
  for (const auto& [_, t] : tallies) f += t.fail;
  return f;
}

std::size_t VerificationReport::unknowns() const {
  std::size_t u = 0;
  for (const auto& [_, t] : tallies) u += t.unknown;
  return u;
}

// Parts cover disjoint, increasing trial ranges.
void VerificationReport::merge(VerificationReport&& other) {
  for (const auto& [c, t] : other.tallies) {
    Tally& mine = tallies[c];
    mine.pass += t.pass;
    mine.fail += t.fail;
    mine.unknown += t.unknown;
  }
  findings.insert(findings.end(), std::make_move_iterator(other.findings.begin()),
                  std::make_move_iterator(other.findings.end()));
  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return a.trial != b.trial ? a.trial < b.trial : a.step < b.step;
  });
}

PropPmResult verify_prop_pm(const QuasiCartan& a, const ExchangeMatrix& b, int k) {
  const auto kk = static_cast<std::size_t>(k);
  const EpsilonMutation plus = epsilon_mutate(a, b, k, Sign::positive);
  const EpsilonMutation minus = epsilon_mutate(a, b, k, Sign::negative);
  if (flip_row_col(plus.matrix, kk) != minus.matrix)
    return {false, true, "eps-mutations at k=" + vertex(k) + " are not related by a sign flip of row and column k"};
  const ExchangeMatrix mutated = mutate_matrix(b, k);
  for (const EpsilonMutation* em : {&plus, &minus}) {
    if (!em->is_companion) continue;
    const Sign eps = em == &plus ? Sign::positive : Sign::negative;
    const EpsilonMutation back = epsilon_mutate(QuasiCartan(em->matrix), mutated, k, -eps);
    if (back.matrix != a.entries())
      return {true, false, "(-eps)-mutation does not undo the eps-mutation at k=" + vertex(k) + ", eps=" + eps_name(eps)};
  }
  return {};
}

VerificationReport verify_walk(const ExchangeMatrix& b0, std::span<const int> ks, bool experimental) {
  require_verifiable(b0, experimental);
  for (int k : ks)
    if (k < 0 || static_cast<std::size_t>(k) >= b0.size())
      throw Error(ErrorCode::invalid_argument, "walk vertex out of range");
  VerificationReport report;
  report.mode = "walk";
  report.experimental = experimental;
  report.b0 = b0.entries();
  report.walks.emplace_back(ks.begin(), ks.end());
  report.depth = ks.size();
  report.trials = 1;
  run_walk(report, 0, b0, cartan_of(b0), ks);
  return report;
}

std::vector<int> random_walk(std::size_t n, std::size_t depth, std::uint64_t seed, std::size_t trial) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
  std::vector<int> walk;
  walk.reserve(depth);
  for (std::size_t t = 0; t < depth; ++t) {
    if (walk.empty() || n == 1) {
      walk.push_back(static_cast<int>(rng() % n));
    } else {
      auto k = static_cast<int>(rng() % (n - 1));
      if (k >= walk.back()) ++k;
      walk.push_back(k);
    }
  }
  return walk;
}

VerificationReport fuzz(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials, std::uint64_t seed,
                        unsigned threads) {
  return random_trials(b0, depth, trials, seed, threads, false);
}

VerificationReport conjecture_search(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials,
                                     std::uint64_t seed, unsigned threads) {
  return random_trials(b0, depth, trials, seed, threads, true);
}

}  // namespace qc
