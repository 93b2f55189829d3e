#include <gtest/gtest.h>

#include "oracles.hpp"
#include "realsnf/realsnf.hpp"

using namespace realsnf;

namespace {

const QuadRing& z2() {
  static const QuadRing r(RingSpec::sqrt(2));
  return r;
}
const QuadRing& z3() {
  static const QuadRing r(RingSpec::sqrt(3));
  return r;
}

std::vector<QuadRing> all_rings() {
  std::vector<QuadRing> out;
  for (long d : kSqrtAllowlist) out.emplace_back(RingSpec::sqrt(d));
  for (long d : kHalfAllowlist) out.emplace_back(RingSpec::half(d));
  return out;
}

}  // namespace

TEST(Quadratic, ConjugateAndNorm) {
  QuadElem q = z3().element(1, 1);
  EXPECT_EQ(q.conjugate(), z3().element(1, -1));
  EXPECT_EQ(z3().element(5, 0).conjugate(), z3().element(5, 0));
  EXPECT_EQ(q.norm(), -2);
  EXPECT_EQ(z3().element(2, 1).norm(), 1);
  EXPECT_EQ(z2().element(1, 1).norm(), -1);

  QuadRing z5(RingSpec::half(5));
  // (1 + sqrt5)/2 -> (1 - sqrt5)/2 = 1 - w
  EXPECT_EQ(z5.element(0, 1).conjugate(), z5.element(1, -1));
  EXPECT_EQ(z5.element(0, 1).norm(), -1);
}

TEST(Quadratic, SignPattern) {
  EXPECT_EQ(z3().element(1, 1).sign_pattern(), (SignPattern{1, -1}));
  EXPECT_EQ(z3().element(2, 1).sign_pattern(), (SignPattern{1, 1}));
  EXPECT_EQ(z3().zero().sign_pattern(), (SignPattern{0, 0}));
}

TEST(Quadratic, SignPatternMatchesFloatingEmbedding) {
  for (const auto& ring : all_rings())
    for (long x = -9; x <= 9; ++x)
      for (long y = -9; y <= 9; ++y) {
        QuadElem a = ring.element(x, y);
        if (a.is_zero()) continue;
        SignPattern s = a.sign_pattern();
        long double p = oracle::embed(a, true), m = oracle::embed(a, false);
        ASSERT_GT(std::fabs(p), 1e-9L);
        EXPECT_EQ(s.at_plus, p > 0 ? 1 : -1) << a << " in " << ring.spec().to_string();
        EXPECT_EQ(s.at_minus, m > 0 ? 1 : -1) << a << " in " << ring.spec().to_string();
      }
}

TEST(Quadratic, MultiplicativeProperties) {
  for (const auto& ring : all_rings()) {
    SplitMix64 rng(ring.field().d);
    for (int t = 0; t < 200; ++t) {
      QuadElem a = ring.element(rng.in_range(-50, 50), rng.in_range(-50, 50));
      QuadElem b = ring.element(rng.in_range(-50, 50), rng.in_range(-50, 50));
      EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
      EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
      EXPECT_EQ(a * a.conjugate(), ring.element(a.norm(), 0));
      if (!a.is_zero() && !b.is_zero()) { EXPECT_EQ((a * b).sign_pattern(), a.sign_pattern() * b.sign_pattern()); }
    }
  }
}

TEST(Quadratic, EuclideanDivisionExample) {
  // (5 + sqrt2) / (1 + sqrt2) = (5 + sqrt2)(1 - sqrt2) / N(1 + sqrt2), computed in Q(sqrt 2).
  FieldElem num = to_field(z2().element(5, 1)) * to_field(z2().element(1, -1));
  FieldElem expected{num.u / -1, num.v / -1, 2};
  auto qr = euclidean_div(z2(), z2().element(5, 1), z2().element(1, 1));
  EXPECT_EQ(to_field(qr.quotient), expected);
  EXPECT_EQ(qr.quotient, z2().element(-3, 4));
  EXPECT_TRUE(qr.remainder.is_zero());
}

TEST(Quadratic, EuclideanDivisionInvariant) {
  for (const auto& ring : all_rings()) {
    SplitMix64 rng(100 + ring.field().d);
    for (int t = 0; t < 400; ++t) {
      QuadElem a = ring.element(rng.in_range(-200, 200), rng.in_range(-200, 200));
      QuadElem b = ring.element(rng.in_range(-12, 12), rng.in_range(-12, 12));
      if (b.is_zero()) continue;
      auto qr = ring.divmod(a, b);
      EXPECT_EQ(b * qr.quotient + qr.remainder, a);
      EXPECT_LT(abs(qr.remainder.norm()), abs(b.norm())) << ring.spec().to_string() << " " << a << " / " << b;
    }
  }
}

TEST(Quadratic, HardDivisionPointForD11) {
  // sqrt11 / 2 sits at fractional coordinates (0, 1/2); plain rounding gives |N| = 11/4.
  QuadRing z11(RingSpec::sqrt(11));
  QuadElem a = z11.element(0, 1), b = z11.element(2, 0);
  auto qr = z11.divmod(a, b);
  EXPECT_EQ(b * qr.quotient + qr.remainder, a);
  EXPECT_LT(abs(qr.remainder.norm()), 4);
}

TEST(Quadratic, GcdAndAssociation) {
  const QuadRing& r = z3();
  QuadElem q = r.element(1, 1), u = r.element(2, 1);
  EXPECT_EQ(gcd(r, q, u), r.one());
  EXPECT_TRUE(are_associated(r, q, q * u));
  EXPECT_FALSE(are_associated(r, q, q.conjugate() * r.element(2, 0)));
  EXPECT_TRUE(are_associated(r, q, q.conjugate()));  // (1 - sqrt3) = (1 + sqrt3)(-2 + sqrt3)
}

TEST(Quadratic, GcdAgainstBoundedDivisorSearch) {
  for (const auto& ring : {QuadRing(RingSpec::sqrt(2)), QuadRing(RingSpec::sqrt(3)), QuadRing(RingSpec::half(5))}) {
    SplitMix64 rng(77 + ring.field().d);
    for (int t = 0; t < 25; ++t) {
      QuadElem c = ring.element(rng.in_range(-3, 3), rng.in_range(-3, 3));
      if (c.is_zero()) continue;
      QuadElem a = c * ring.element(rng.in_range(-3, 3), rng.in_range(-3, 3));
      QuadElem b = c * ring.element(rng.in_range(-3, 3), rng.in_range(-3, 3));
      if (a.is_zero() && b.is_zero()) continue;
      QuadElem g = gcd(ring, a, b);
      EXPECT_TRUE(divides(ring, g, a));
      EXPECT_TRUE(divides(ring, g, b));
      EXPECT_EQ(g.sign_pattern().at_plus, 1);
      EXPECT_EQ(ring.normalize(g).value, g);
      for (const auto& d : oracle::bounded_divisors(ring, a, 6))
        if (divides(ring, d, b)) { EXPECT_TRUE(divides(ring, d, g)) << d << " | " << a << ", " << b; }
    }
  }
}

TEST(Quadratic, CanonicalAssociateIsClassInvariant) {
  for (const auto& ring : all_rings()) {
    const QuadElem u = ring.fundamental_unit().unit;
    SplitMix64 rng(5 + ring.field().d);
    for (int t = 0; t < 50; ++t) {
      QuadElem a = ring.element(rng.in_range(-30, 30), rng.in_range(-30, 30));
      if (a.is_zero()) continue;
      QuadElem canon = ring.normalize(a).value;
      EXPECT_EQ(canon.sign_pattern().at_plus, 1);
      EXPECT_EQ(ring.normalize(a).unit * a, canon);
      QuadElem v = a;
      for (int k = 0; k < 4; ++k) {
        v = v * u;
        EXPECT_EQ(ring.normalize(v).value, canon);
        EXPECT_EQ(ring.normalize(-v).value, canon);
      }
    }
  }
}

TEST(Quadratic, AssociationIsEquivalence) {
  const QuadRing& r = z3();
  SplitMix64 rng(3);
  std::vector<QuadElem> pool;
  for (int i = 0; i < 12; ++i) {
    QuadElem base = r.element(rng.in_range(-2, 2), rng.in_range(-2, 2));
    pool.push_back(base);
    pool.push_back(base * r.element(2, 1));
    pool.push_back(-base);
  }
  for (const auto& a : pool) {
    EXPECT_TRUE(are_associated(r, a, a));
    for (const auto& b : pool) {
      EXPECT_EQ(are_associated(r, a, b), are_associated(r, b, a));
      for (const auto& c : pool)
        if (are_associated(r, a, b) && are_associated(r, b, c)) { EXPECT_TRUE(are_associated(r, a, c)); }
    }
  }
}

TEST(Quadratic, Valuation) {
  const QuadRing& r = z3();
  QuadElem p = r.element(1, 1);
  QuadElem a = p * p * r.element(5, 0);
  EXPECT_EQ(a, r.element(20, 10));
  EXPECT_EQ(valuation(r, p, a), 2);
  // 5 is inert (3 is not a square mod 5), so the cofactor contributes nothing.
  EXPECT_TRUE(r.min_poly_roots_mod(Integer(5)).empty());
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    QuadElem x = r.element(rng.in_range(-20, 20), rng.in_range(-20, 20));
    QuadElem y = r.element(rng.in_range(-20, 20), rng.in_range(-20, 20));
    if (x.is_zero() || y.is_zero()) continue;
    EXPECT_EQ(valuation(r, p, x * y), valuation(r, p, x) + valuation(r, p, y));
  }
}

TEST(Quadratic, FundamentalUnits) {
  EXPECT_EQ(z3().fundamental_unit().unit, z3().element(2, 1));
  EXPECT_EQ(z3().fundamental_unit().norm, 1);
  EXPECT_EQ(z2().fundamental_unit().unit, z2().element(1, 1));
  EXPECT_EQ(z2().fundamental_unit().norm, -1);
  QuadRing z7(RingSpec::sqrt(7));
  EXPECT_EQ(z7.fundamental_unit().unit, z7.element(8, 3));
  EXPECT_EQ(z7.fundamental_unit().norm, 1);
  for (long d : kSqrtAllowlist) {
    auto [x, y] = oracle::pell_box_search(d, 50);
    QuadRing r(RingSpec::sqrt(d));
    EXPECT_EQ(r.fundamental_unit().unit, r.element(x, y)) << d;
  }
  QuadRing z5(RingSpec::half(5)), z13(RingSpec::half(13));
  EXPECT_EQ(z5.fundamental_unit().unit, z5.element(0, 1));   // golden ratio
  EXPECT_EQ(z13.fundamental_unit().unit, z13.element(1, 1)); // (3 + sqrt13)/2
  EXPECT_EQ(z13.fundamental_unit().norm, -1);
}

TEST(Quadratic, Pnri) {
  EXPECT_TRUE(z2().pnri_holds());
  EXPECT_FALSE(z3().pnri_holds());
  for (long d : {6L, 7L, 11L}) EXPECT_FALSE(QuadRing(RingSpec::sqrt(d)).pnri_holds()) << d;
  EXPECT_TRUE(QuadRing(RingSpec::half(5)).pnri_holds());
  EXPECT_TRUE(QuadRing(RingSpec::half(13)).pnri_holds());
}

TEST(Quadratic, AchievableSignPatterns) {
  std::set<SignPattern> all{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  EXPECT_EQ(z2().achievable_sign_patterns(), all);
  EXPECT_EQ(z3().achievable_sign_patterns(), (std::set<SignPattern>{{1, 1}, {-1, -1}}));
  for (const auto& ring : all_rings()) {
    auto pats = ring.achievable_sign_patterns();
    EXPECT_TRUE(pats.count(ring.one().sign_pattern()));
    EXPECT_EQ(pats.size() == 4, ring.pnri_holds());
  }
}

TEST(Quadratic, UnitSignPatternsArePeriodic) {
  for (const auto& ring : all_rings()) {
    const auto& fu = ring.fundamental_unit();
    QuadElem u = ring.one();
    for (int k = 0; k <= 6; ++k) {
      SignPattern s = u.sign_pattern();
      int n = k % 2 == 0 ? 1 : fu.norm.get_si();
      EXPECT_EQ(s, (SignPattern{1, n}));
      EXPECT_EQ(u.norm(), n);
      u = u * fu.unit;
    }
  }
}

TEST(Quadratic, PositiveAssociate) {
  EXPECT_EQ(z3().positive_associate(z3().element(-5, 0)), z3().element(5, 0));
  EXPECT_FALSE(z3().positive_associate(z3().element(1, 1)).has_value());
  auto p = z2().positive_associate(z2().element(1, -1));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->sign_pattern(), (SignPattern{1, 1}));
  EXPECT_EQ(*p, z2().one());  // (1 - sqrt2) * -(1 + sqrt2) = 1
  EXPECT_THROW(z3().positive_associate(z3().zero()), Error);
}

TEST(Quadratic, PositiveAssociateMatchesExhaustiveUnitSearch) {
  for (const auto& ring : all_rings()) {
    SplitMix64 rng(9 + ring.field().d);
    const QuadElem u = ring.fundamental_unit().unit;
    const QuadElem uinv = ring.unit_inverse(u);
    for (int t = 0; t < 60; ++t) {
      QuadElem a = ring.element(rng.in_range(-15, 15), rng.in_range(-15, 15));
      if (a.is_zero()) continue;
      bool found = false;
      for (int k = -3; k <= 3; ++k) {
        QuadElem uk = power(ring, k >= 0 ? u : uinv, static_cast<unsigned long>(std::abs(k)));
        for (const QuadElem& cand : {a * uk, -(a * uk)})
          if (cand.sign_pattern() == SignPattern{1, 1}) found = true;
      }
      auto pos = ring.positive_associate(a);
      EXPECT_EQ(pos.has_value(), found) << a;
      if (pos) {
        EXPECT_TRUE(are_associated(ring, *pos, a));
        EXPECT_EQ(pos->sign_pattern(), (SignPattern{1, 1}));
      }
    }
  }
}

TEST(Quadratic, Factor) {
  auto f2 = z2().factor(z2().element(2, 0));
  ASSERT_EQ(f2.factors.size(), 1u);
  EXPECT_TRUE(are_associated(z2(), f2.factors[0].first, z2().element(0, 1)));
  EXPECT_EQ(f2.factors[0].second, 2);

  auto fq = z3().factor(z3().element(1, 1));
  ASSERT_EQ(fq.factors.size(), 1u);
  EXPECT_TRUE(are_associated(z3(), fq.factors[0].first, z3().element(1, 1)));
  EXPECT_EQ(fq.factors[0].second, 1);
  EXPECT_TRUE(z3().certify_irreducible(z3().element(1, 1)));
  EXPECT_FALSE(z3().is_real_prime(z3().element(1, 1)));
  EXPECT_FALSE(z2().is_real_prime(z2().element(0, 1)));

  EXPECT_THROW(z3().factor(z3().element(2, 1)), Error);
  EXPECT_THROW(z3().factor(z3().zero()), Error);
}

TEST(Quadratic, FactorRecombines) {
  for (const auto& ring : all_rings()) {
    SplitMix64 rng(31 + ring.field().d);
    for (int t = 0; t < 60; ++t) {
      QuadElem a = ring.element(rng.in_range(-40, 40), rng.in_range(-40, 40));
      if (a.is_zero() || ring.is_unit(a)) continue;
      auto f = ring.factor(a);
      QuadElem prod = f.unit;
      EXPECT_TRUE(ring.is_unit(f.unit));
      for (const auto& [p, m] : f.factors) {
        EXPECT_TRUE(ring.certify_irreducible(p)) << p << " in " << ring.spec().to_string();
        EXPECT_EQ(p, ring.canonical_factor(p));
        prod = prod * power(ring, p, static_cast<unsigned long>(m));
      }
      EXPECT_EQ(prod, a);
    }
  }
}

TEST(Quadratic, TextForm) {
  QuadField f{3, QuadForm::Sqrt};
  EXPECT_EQ(QuadElem::parse("1+1w", f), QuadElem(1, 1, f));
  EXPECT_EQ(QuadElem::parse("1-1w", f), QuadElem(1, -1, f));
  EXPECT_EQ(QuadElem::parse("1+-1w", f), QuadElem(1, -1, f));
  EXPECT_EQ(QuadElem::parse("-3w", f), QuadElem(0, -3, f));
  EXPECT_EQ(QuadElem::parse("w", f), QuadElem(0, 1, f));
  EXPECT_EQ(QuadElem::parse("-7", f), QuadElem(-7, 0, f));
  EXPECT_EQ(QuadElem(4, -2, f).to_string(), "4-2w");
  EXPECT_EQ(QuadElem(-1, 1, f).to_string(), "-1+1w");
  EXPECT_THROW(QuadElem::parse("1+xw", f), Error);
}
