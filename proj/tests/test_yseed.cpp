#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quasicartan/error.hpp"
#include "quasicartan/fixtures.hpp"
#include "quasicartan/yseed.hpp"
#include "support.hpp"

using namespace qc;
using testing_support::to_mat;

namespace {

oracle::Mat coords_of(const YSeed& s) {
  oracle::Mat out;
  for (const IntVector& c : s.coords()) out.emplace_back(c.begin(), c.end());
  return out;
}

}  // namespace

TEST(SignOf, Coherence) {
  EXPECT_EQ(sign_of(std::vector<Int>{1, 0, 1}), Sign::positive);
  EXPECT_EQ(sign_of(std::vector<Int>{-1, 0, 0}), Sign::negative);
  try {
    sign_of(std::vector<Int>{1, -1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::mixed_signs);
  }
  try {
    sign_of(std::vector<Int>{0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_vector);
  }
}

TEST(InitialSeed, StandardBasis) {
  for (const ExchangeMatrix& b : {fixtures::a2(), fixtures::a3(), fixtures::k4()}) {
    const YSeed s = initial_seed(b);
    EXPECT_EQ(coords_of(s), oracle::identity(static_cast<int>(b.size())));
    EXPECT_EQ(s.matrix(), b);
  }
}

TEST(YSeed, RejectsDimensionMismatch) {
  std::vector<CVector> c{CVector({1, 0})};
  EXPECT_THROW(YSeed(c, fixtures::a2()), Error);
}

TEST(MutateSeed, RankTwo) {
  const YSeed s = mutate_seed(initial_seed(fixtures::a2()), 0);
  EXPECT_EQ(coords_of(s), (oracle::Mat{{-1, 0}, {1, 1}}));
  EXPECT_EQ(s.matrix().entries(), (IntMatrix{{0, -1}, {1, 0}}));
}

TEST(MutateSeed, A3AtMiddleVertex) {
  const YSeed s = mutate_seed(initial_seed(fixtures::a3()), 1);
  EXPECT_EQ(coords_of(s), (oracle::Mat{{1, 1, 0}, {0, -1, 0}, {0, 0, 1}}));
  // Arrows 2 → 1, 3 → 2, 1 → 3.
  EXPECT_GT(s.matrix()(0, 1), 0);
  EXPECT_GT(s.matrix()(1, 2), 0);
  EXPECT_GT(s.matrix()(2, 0), 0);
}

TEST(MutateSeed, NonSeedInputLosesCoherence) {
  // c-vectors not reachable from the standard basis.
  const YSeed s({CVector({1, 0}), CVector({0, -1})}, ExchangeMatrix::validate({{0, 1}, {-1, 0}}));
  try {
    mutate_seed(s, 1);
    FAIL();
  } catch (const SignCoherenceLost& e) {
    EXPECT_EQ(e.prefix(), (std::vector<int>{1}));
  }
}

TEST(ApplyWalk, ReturnsAfterDoubleStep) {
  const YSeed s = initial_seed(fixtures::a3());
  const std::vector<int> ks{1, 1};
  EXPECT_EQ(apply_walk(s, ks).last(), s);
}

TEST(ApplyWalk, PentagonPeriod) {
  const ExchangeMatrix b = fixtures::a2();
  const std::vector<int> ks{0, 1, 0, 1, 0};
  const WalkRecord rec = apply_walk(initial_seed(b), ks);
  ASSERT_EQ(rec.steps.size(), 5u);

  oracle::Mat c = oracle::identity(2);
  oracle::Mat m = to_mat(b.entries());
  for (std::size_t t = 0; t < ks.size(); ++t) {
    c = oracle::mutate_c(c, m, ks[t]);
    m = oracle::mutate(m, ks[t]);
    ASSERT_EQ(coords_of(rec.steps[t].seed), c) << "step " << t;
  }
  // Five steps return to the initial seed with the two labels exchanged.
  EXPECT_EQ(coords_of(rec.last()), (oracle::Mat{{0, 1}, {1, 0}}));
  EXPECT_EQ(rec.last().matrix().entries(), (IntMatrix{{0, -1}, {1, 0}}));
}

TEST(ApplyWalk, SingleStepRecord) {
  const std::vector<int> ks{0};
  EXPECT_EQ(apply_walk(initial_seed(fixtures::k4()), ks).steps.size(), 1u);
}

TEST(ApplyWalk, MatchesOracleAndReverses) {
  std::mt19937_64 rng(99);
  const std::vector<ExchangeMatrix> starts{fixtures::a3(), fixtures::a4(), fixtures::d4(), fixtures::a5()};
  for (int trial = 0; trial < 200; ++trial) {
    const ExchangeMatrix& b = starts[static_cast<std::size_t>(trial) % starts.size()];
    const int n = static_cast<int>(b.size());
    std::vector<int> ks;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10; ++t) ks.push_back(pick(rng));

    const WalkRecord rec = apply_walk(initial_seed(b), ks);
    oracle::Mat c = oracle::identity(n);
    oracle::Mat m = to_mat(b.entries());
    for (int k : ks) {
      c = oracle::mutate_c(c, m, k);
      m = oracle::mutate(m, k);
    }
    ASSERT_EQ(coords_of(rec.last()), c);
    ASSERT_EQ(to_mat(rec.last().matrix().entries()), m);

    std::vector<int> back(ks.rbegin(), ks.rend());
    ASSERT_EQ(apply_walk(rec.last(), back).last(), rec.start);
  }
}

TEST(ApplyWalk, RelabellingCommutesWithMutation) {
  const ExchangeMatrix b = fixtures::d4();
  const std::vector<int> perm{2, 0, 3, 1};  // new vertex i is old vertex perm[i]
  const ExchangeMatrix pb = ExchangeMatrix::validate(permute(b.entries(), perm));
  const std::vector<int> ks{1, 0, 2, 3, 1};
  std::vector<int> pks;
  for (int k : ks) pks.push_back(static_cast<int>(std::find(perm.begin(), perm.end(), k) - perm.begin()));

  const YSeed s = apply_walk(initial_seed(b), ks).last();
  const YSeed ps = apply_walk(initial_seed(pb), pks).last();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < 4; ++t)
      EXPECT_EQ(ps.cvector(i)[t], s.cvector(static_cast<std::size_t>(perm[i]))[static_cast<std::size_t>(perm[t])]);
  EXPECT_EQ(ps.matrix().entries(), permute(s.matrix().entries(), perm));
}
