#include <gtest/gtest.h>

#include "oracles.hpp"
#include "realsnf/realsnf.hpp"

using namespace realsnf;

namespace {

using ZM = Matrix<Integer>;
const RatPoly X = RatPoly::x();
RatPoly c(long v) { return RatPoly::constant(Rational(v)); }

ZM zmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> v;
  for (auto r : rows) {
    v.emplace_back();
    for (long x : r) v.back().emplace_back(x);
  }
  return ZM::from_rows(v);
}

template <class R>
void expect_associated_lists(const R& ring, const std::vector<ElementOf<R>>& a, const std::vector<ElementOf<R>>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(are_associated(ring, a[i], b[i])) << ring.format(a[i]);
}

template <class R>
void check_random_snfs(const R& ring, const RingSpec& spec, std::uint64_t seed, int count) {
  TrialConfig cfg{spec};
  SplitMix64 rng(seed);
  for (int t = 0; t < count; ++t) {
    auto rows = static_cast<std::size_t>(rng.in_range(1, 4));
    auto cols = static_cast<std::size_t>(rng.in_range(1, 4));
    auto m = random_matrix(ring, rng, cfg, rows, cols);
    auto s = smith_normal_form(ring, m);
    auto check = verify_snf(ring, m, s);
    EXPECT_TRUE(check.ok) << (check.diagnostics.empty() ? "" : check.diagnostics.front());
    for (const auto& d : s.diagonals) EXPECT_EQ(ring.normalize(d).value, d);
  }
}

}  // namespace

TEST(Smith, FixedExamples) {
  IntegerRing z;
  auto s = smith_normal_form(z, zmat({{2, 4}, {4, 2}}));
  EXPECT_EQ(s.diagonals, (std::vector<Integer>{2, 6}));
  EXPECT_EQ(s.P * s.D * s.Q, zmat({{2, 4}, {4, 2}}));

  auto id = smith_normal_form(z, ZM::identity(3, 0, 1));
  EXPECT_EQ(id.diagonals, (std::vector<Integer>{1, 1, 1}));

  PolyRing q;
  auto sx = smith_normal_form(q, Matrix<RatPoly>::from_rows({{X, c(0)}, {c(0), X * X}}));
  EXPECT_EQ(sx.diagonals, (std::vector<RatPoly>{X, X * X}));

  auto rank1 = smith_normal_form(q, Matrix<RatPoly>::from_rows({{X * X, X}, {X, c(1)}}));
  EXPECT_EQ(rank1.diagonals, (std::vector<RatPoly>{c(1)}));
  EXPECT_TRUE(rank1.D(1, 1).is_zero());
}

TEST(Smith, Rectangular) {
  IntegerRing z;
  auto m = zmat({{6, 4, 2}, {10, 8, 12}});
  auto s = smith_normal_form(z, m);
  EXPECT_EQ(s.P.rows(), 2u);
  EXPECT_EQ(s.Q.rows(), 3u);
  EXPECT_EQ(s.P * s.D * s.Q, m);
  EXPECT_EQ(s.diagonals, (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(verify_snf(z, m, s).ok);
}

TEST(Smith, MinorGcdProfile) {
  IntegerRing z;
  EXPECT_EQ(minor_gcd_profile(z, zmat({{2, 4}, {4, 2}})).per_order, (std::vector<Integer>{2, 12}));
  EXPECT_EQ(minor_gcd_profile(z, ZM::identity(4, 0, 1)).per_order, (std::vector<Integer>(4, 1)));
  EXPECT_EQ(minor_gcd_profile(z, ZM(3, 3, 0)).per_order, (std::vector<Integer>(3, 0)));
  EXPECT_THROW(minor_gcd_profile(z, ZM(7, 7, 1)), Error);
}

TEST(Smith, VerifyRejectsWrongClaim) {
  IntegerRing z;
  auto m = zmat({{2, 0}, {0, 2}});
  SnfResult<Integer> claim{ZM::identity(2, 0, 1), zmat({{1, 0}, {0, 4}}), ZM::identity(2, 0, 1), {1, 4}};
  auto check = verify_snf(z, m, claim);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.diagnostics.empty());

  auto zero = zmat({{0}});
  SnfResult<Integer> trivial{zmat({{1}}), zmat({{0}}), zmat({{1}}), {}};
  EXPECT_TRUE(verify_snf(z, zero, trivial).ok);
  EXPECT_EQ(smith_normal_form(z, zero).diagonals.size(), 0u);
}

TEST(Smith, RandomOverAllRings) {
  check_random_snfs(IntegerRing(), RingSpec::integers(), 1, 60);
  check_random_snfs(PolyRing(), RingSpec::rational_polynomials(), 2, 40);
  for (const char* s : {"Zsqrt:2", "Zsqrt:3", "Zsqrt:7", "Zsqrt:11", "Zhalf:5", "Zhalf:13"}) {
    QuadRing r(RingSpec::parse(s));
    check_random_snfs(r, r.spec(), 3, 25);
  }
}

TEST(Smith, UnimodularInvariance) {
  QuadRing r(RingSpec::sqrt(3));
  TrialConfig cfg{r.spec()};
  SplitMix64 rng(44);
  for (int t = 0; t < 20; ++t) {
    auto n = static_cast<std::size_t>(rng.in_range(1, 3));
    auto m = random_matrix(r, rng, cfg, n, n);
    auto U = random_unimodular(r, rng, cfg, n), V = random_unimodular(r, rng, cfg, n);
    EXPECT_TRUE(r.is_unit(determinant(r, U)));
    expect_associated_lists(r, smith_normal_form(r, U * m * V).diagonals, smith_normal_form(r, m).diagonals);
  }
}

TEST(Determinant, Examples) {
  IntegerRing z;
  EXPECT_EQ(determinant(z, zmat({{2, 4}, {4, 2}})), -12);
  EXPECT_EQ(determinant(z, ZM::identity(4, 0, 1)), 1);
  EXPECT_THROW(determinant(z, zmat({{1, 2}})), Error);

  QuadRing r(RingSpec::sqrt(3));
  QuadElem q = r.element(1, 1), e = r.element(2, 1);
  auto m = Matrix<QuadElem>::from_rows({{q * q, q * e}, {q * e, q * q * e}});
  QuadElem det = determinant(r, m);
  EXPECT_EQ(det, q * q * e * (q * q - e));
  EXPECT_EQ(det, q * q * e * e);  // q^2 - e = 2 + sqrt3 = e
  EXPECT_EQ(det, oracle::cofactor_det(m, r.zero(), r.one()));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  IntegerRing z;
  PolyRing p;
  QuadRing q(RingSpec::half(13));
  SplitMix64 rng(90);
  for (int t = 0; t < 40; ++t) {
    auto n = static_cast<std::size_t>(rng.in_range(1, 4));
    auto mz = random_matrix(z, rng, TrialConfig{z.spec()}, n, n);
    EXPECT_EQ(determinant(z, mz), oracle::cofactor_det(mz, z.zero(), z.one()));
    auto mp = random_matrix(p, rng, TrialConfig{p.spec()}, n, n);
    EXPECT_EQ(determinant(p, mp), oracle::cofactor_det(mp, p.zero(), p.one()));
    auto mq = random_matrix(q, rng, TrialConfig{q.spec()}, n, n);
    EXPECT_EQ(determinant(q, mq), oracle::cofactor_det(mq, q.zero(), q.one()));
  }
}

TEST(Smith, RankDeficientPolyGramStaysSmall) {
  // Rank-3 Gram matrix over Q[x]; invariants are 1, 1 and a degree-12 polynomial.
  PolyRing p;
  TrialConfig cfg{p.spec(), 4, 3, 1, trial_seed(1, 5), 2};
  auto m = random_psd_matrix(p, cfg);
  ASSERT_EQ(m.rows(), 4u);
  auto s = smith_normal_form(p, m);
  ASSERT_EQ(s.diagonals.size(), 3u);
  EXPECT_EQ(s.diagonals[0], c(1));
  EXPECT_EQ(s.diagonals[1], c(1));
  EXPECT_EQ(s.diagonals[2].degree(), 12);
  EXPECT_TRUE(verify_snf(p, m, s).ok);
}

TEST(Smith, DivisibilityFixOnDiagonalInput) {
  IntegerRing z;
  auto m = zmat({{6, 0, 0}, {0, 4, 0}, {0, 0, 9}});
  auto s = smith_normal_form(z, m);
  EXPECT_EQ(s.diagonals, (std::vector<Integer>{1, 6, 36}));
  EXPECT_TRUE(verify_snf(z, m, s).ok);
}

TEST(Smith, FiveByFivePolyGram) {
  PolyRing p;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    TrialConfig cfg{p.spec(), 5, 3, 1, seed, 2};
    auto m = random_psd_matrix(p, cfg);
    auto s = smith_normal_form(p, m);
    EXPECT_EQ(s.P * s.D * s.Q, m);
    EXPECT_TRUE(verify_snf(p, m, s).ok);
  }
}
