#include "toricval/exact.hpp"

#include <gtest/gtest.h>

using namespace toricval;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-4"), Rat(-4));
  EXPECT_EQ(parse_rat("-7/14"), Rat(-1, 2));
  EXPECT_EQ(to_string(Rat(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rat(5)), "5");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "0.5"}) {
    try {
      parse_rat(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Input) << bad;
    }
  }
}

TEST(Rational, PrimitiveVectors) {
  const RatVec v{Rat(2, 3), Rat(-4, 9), Rat(0)};
  EXPECT_EQ(primitive(v), (IntVec{3, -2, 0}));
  EXPECT_EQ(primitive_scale(v) * v[0], Rat(3));
  EXPECT_EQ(dot(v, RatVec{Rat(3), Rat(9), Rat(100)}), Rat(-2));
  EXPECT_TRUE(is_zero(RatVec{Rat(0), Rat(0)}));
  EXPECT_EQ(gcd(Int(12), Int(-18)), Int(6));
  EXPECT_EQ(lcm(Int(4), Int(6)), Int(12));
}

TEST(Poly, ArithmeticAndShift) {
  const Poly p({Rat(1), Rat(2), Rat(1)});  // (n + 1)^2
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(3), Rat(16));
  EXPECT_EQ(p.shifted(1).eval(3), Rat(25));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((p * Poly({Rat(-1), Rat(1)})).eval(2), Rat(9));
  EXPECT_EQ(Poly::monomial(Rat(3), 2).lead(), Rat(3));
}

TEST(Poly, RootBoundDominatesRealRoots) {
  const Poly p({Rat(-30), Rat(1), Rat(1)});  // roots 5 and -6
  const Int n = p.root_bound();
  EXPECT_GT(n, Int(5));
  for (Int k = n; k < n + 20; ++k) EXPECT_GT(p.eval(Rat(k)), 0);
}

TEST(RatFun, EvaluationLimitsAndSign) {
  const RatFun f(Poly({Rat(1), Rat(2)}), Poly({Rat(0), Rat(1)}), 1);  // (2n + 1) / n
  EXPECT_EQ(f.eval(2), Rat(5, 2));
  EXPECT_EQ(rf_limit(f), (RfLimit{RfLimit::Kind::Finite, Rat(2)}));
  EXPECT_EQ(f.eventual_sign(), 1);
  EXPECT_EQ(f.shifted(1).eval(1), f.eval(2));

  const RatFun g = RatFun::polynomial(Poly({Rat(3), Rat(-1)}));  // 3 - n
  EXPECT_EQ(rf_limit(g).kind, RfLimit::Kind::MinusInfinity);
  EXPECT_EQ(g.eventual_sign(), -1);
  for (long n = g.eventual_threshold(); n < g.eventual_threshold() + 10; ++n) EXPECT_LE(g.eval(n), 0);
}

TEST(RatFun, IdentityByCrossMultiplication) {
  const RatFun a(Poly({Rat(2), Rat(2)}), Poly({Rat(0), Rat(2)}), 1);
  const RatFun b(Poly({Rat(1), Rat(1)}), Poly({Rat(0), Rat(1)}), 1);
  EXPECT_TRUE(a.equals(b));
  EXPECT_FALSE(a.equals(b.shifted(1)));
  EXPECT_TRUE((a - b).is_zero());
}

TEST(Gamma, MembershipAndMultiplier) {
  const GammaSpec z = GammaSpec::discrete();
  const GammaSpec q = GammaSpec::divisible();
  const GammaSpec z2 = GammaSpec::prime_localized({2});
  EXPECT_TRUE(z.contains(Rat(-3)));
  EXPECT_FALSE(z.contains(Rat(1, 2)));
  EXPECT_TRUE(q.contains(Rat(5, 7)));
  EXPECT_TRUE(z2.contains(Rat(3, 8)));
  EXPECT_FALSE(z2.contains(Rat(1, 3)));
  EXPECT_EQ(z2.multiplier(Rat(5, 12)), Int(3));
  EXPECT_EQ(z.multiplier(Rat(3, 4)), Int(4));
  EXPECT_EQ(q.multiplier(Rat(3, 4)), Int(1));
}

TEST(Gamma, ParseAndScale) {
  EXPECT_EQ(GammaSpec::parse("Z"), GammaSpec::discrete());
  EXPECT_EQ(GammaSpec::parse("Q"), GammaSpec::divisible());
  EXPECT_EQ(GammaSpec::parse("Z[1/2]"), GammaSpec::prime_localized({2}));
  const GammaSpec half = GammaSpec::parse("Z*1/2");
  EXPECT_TRUE(half.is_discrete());
  EXPECT_EQ(half.unit(), Rat(1, 2));
  EXPECT_EQ(half.step(), Rat(1, 2));
  EXPECT_EQ(GammaSpec::divisible().step(), Rat(1));

  const GammaSpec scaled = GammaSpec::prime_localized({2}).scaled_down(3);
  EXPECT_TRUE(scaled.contains(Rat(1, 3)));
  EXPECT_TRUE(scaled.contains(Rat(1, 6)));
  EXPECT_FALSE(scaled.contains(Rat(1, 9)));
  EXPECT_EQ(GammaSpec::parse(scaled.to_string()), scaled);
  EXPECT_THROW(GammaSpec::parse("R"), Error);
}
