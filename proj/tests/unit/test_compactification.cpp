#include "generators.hpp"
#include "oracles.hpp"

#include "toricval/compactification.hpp"

#include <gtest/gtest.h>

using namespace toricval;
using namespace toricval::testing;

namespace {

Polyhedron cone2(std::vector<RatVec> rays) { return Polyhedron::from_generators(2, {{0, 0}}, std::move(rays)); }
Polyhedron seg(Rat a, Rat b) { return Polyhedron::from_generators(1, {{a}, {b}}); }
Poly lin(long a, long b) { return Poly({Rat(a), Rat(b)}); }

// The shrinking intervals [1/(n+1), 1/n] together with the point 0.
FamilyComplex shrinking_comb() {
  FamilyComplex phi;
  phi.dim = 1;
  phi.finite_part = face_closure(1, {Polyhedron::point({0})});
  FamilyCell f;
  f.dim = 1;
  f.n_min = 1;
  f.label = "I";
  f.ineqs.push_back({{Poly::constant(1)}, RatFun(Poly::constant(1), lin(1, 1), 1)});
  f.ineqs.push_back({{Poly::constant(-1)}, RatFun(Poly::constant(-1), lin(0, 1), 1)});
  phi.families.push_back(f);
  return phi;
}

// [n, n+1] for n >= 1 and [-n-1, -n] for n >= 0, with [0,1] finite.
FamilyComplex staircase() {
  FamilyComplex phi;
  phi.dim = 1;
  phi.finite_part = face_closure(1, {seg(0, 1)});
  auto interval = [](Poly lo, Poly hi, long n_min) {
    FamilyCell f;
    f.dim = 1;
    f.n_min = n_min;
    f.ineqs.push_back({{Poly::constant(1)}, RatFun::polynomial(lo, n_min)});
    f.ineqs.push_back({{Poly::constant(-1)}, RatFun::polynomial(Rat(-1) * hi, n_min)});
    return f;
  };
  phi.families.push_back(interval(lin(0, 1), lin(1, 1), 1));
  phi.families.push_back(interval(lin(-1, -1), lin(0, -1), 0));
  return phi;
}

Complex line_fan() {
  return face_closure(1, {Polyhedron::from_generators(1, {{0}}, {{1}}), Polyhedron::from_generators(1, {{0}}, {{-1}})});
}

}  // namespace

TEST(Strata, QuotientsOfAFan) {
  const Complex fan = face_closure(2, {cone2({{1, 0}, {1, 2}})});
  const auto strata = strata_of(fan);
  ASSERT_EQ(strata.size(), 4u);
  EXPECT_TRUE(strata.front().is_dense());
  EXPECT_EQ(strata.front().rank, 2u);
  for (const auto& s : strata) {
    EXPECT_EQ(s.rank, 2u - static_cast<std::size_t>(s.sigma.dim()));
    for (const auto& r : s.sigma.rays()) {
      for (const auto& x : s.project(to_rat(r))) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Closure, PiecesOfAShiftedQuadrant) {
  const Polyhedron p = Polyhedron::from_generators(2, {{1, 0}}, {{1, 0}, {0, 1}});
  const Complex fan = face_closure(2, {cone2({{1, 0}, {0, 1}})});
  const CompactifiedSet cl = compactified_closure(p, fan);
  EXPECT_EQ(cl.pieces.size(), 4u);
  const Polyhedron e1 = cone2({{1, 0}});
  const Stratum s1 = make_stratum(e1);
  ASSERT_NE(cl.piece(e1), nullptr);
  EXPECT_TRUE(contains(*cl.piece(e1), s1.project({5, 2})));
  EXPECT_FALSE(contains(*cl.piece(e1), s1.project({5, -1})));
  EXPECT_TRUE(closure_contains(p, s1, s1.project({0, 3})));
  EXPECT_TRUE(closure_reaches(recession_cone(p), e1));
}

TEST(Closure, MissesStrataOutsideTheRecessionCone) {
  const Polyhedron p = Polyhedron::from_generators(2, {{0, 0}}, {{1, 0}});
  const Complex fan = face_closure(2, {cone2({{1, 0}, {0, 1}})});
  const CompactifiedSet cl = compactified_closure(p, fan);
  EXPECT_EQ(cl.pieces.size(), 2u);
  EXPECT_EQ(cl.piece(cone2({{0, 1}})), nullptr);
  EXPECT_FALSE(closure_reaches(recession_cone(p), cone2({{0, 1}})));
}

TEST(Closure, EscapingSequencesLandInPieces) {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    Polyhedron p;
    do p = random_pointed_polyhedron(rng, 2, 2);
    while (p.rays().empty());
    const Complex fan = random_complete_fan_2d(rng);
    RatVec v(2, Rat(0));
    for (const auto& r : p.rays()) v = v + to_rat(r);
    const auto tau = carrier_cone(fan, v);
    ASSERT_TRUE(tau.has_value());
    const Stratum s = make_stratum(*tau);
    const CompactifiedSet cl = compactified_closure(p, fan);
    ASSERT_NE(cl.piece(*tau), nullptr);
    EXPECT_TRUE(contains(*cl.piece(*tau), s.project(relint_point(p))));
  }
}

TEST(LocalFiniteness, ShrinkingIntervalsAccumulateAtZero) {
  const FamilyComplex phi = shrinking_comb();
  const Complex dense = face_closure(1, {Polyhedron::point({0})});
  const Verdict at0 = locally_finite_at(phi, dense, {Polyhedron::point({0}), {Rat(0)}});
  ASSERT_TRUE(at0.is_refuted());
  EXPECT_EQ(at0.certificate.at("witness").at("point"), Json::array({"0"}));
  EXPECT_TRUE(locally_finite_at(phi, dense, {Polyhedron::point({0}), {Rat(1, 2)}}).is_proved());
  const auto acc = accumulation_points(phi, dense);
  ASSERT_EQ(acc.size(), 1u);
  EXPECT_EQ(acc.front().point, RatVec{0});
}

TEST(LocalFiniteness, StratumMismatchIsAnError) {
  const FamilyComplex phi = shrinking_comb();
  const Complex dense = face_closure(1, {Polyhedron::point({0})});
  try {
    locally_finite_at(phi, dense, {Polyhedron::from_generators(1, {{0}}, {{1}}), {}});
    FAIL() << "expected StratumMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StratumMismatch);
  }
  EXPECT_THROW(locally_finite_at(phi, dense, {Polyhedron::point({0}), {Rat(0), Rat(0)}}), Error);
}

TEST(LocalFiniteness, StaircaseOverTheDenseFan) {
  const FamilyComplex phi = staircase();
  const Complex dense = face_closure(1, {Polyhedron::point({0})});
  EXPECT_TRUE(closures_locally_finite_in_support(phi, dense).is_proved());
  EXPECT_TRUE(locally_finite_in_compactification(phi, dense).is_proved());
  EXPECT_TRUE(condition_star(phi, dense).is_proved());
  const Verdict iso = domain_isomorphism_verdict(phi, dense);
  ASSERT_TRUE(iso.is_proved());
  EXPECT_EQ(iso.certificate.at("nerve_components"), 1);
  EXPECT_EQ(iso.certificate.at("union_components"), 1);
}

TEST(LocalFiniteness, StaircaseAccumulatesAtInfinity) {
  // bounded members pile up at the ray strata of P^1, which their union never reaches
  const FamilyComplex phi = staircase();
  const Complex fan = line_fan();
  EXPECT_TRUE(closures_locally_finite_in_support(phi, fan).is_proved());
  const Verdict v = locally_finite_in_compactification(phi, fan);
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(v.certificate.at("witness").at("stratum_rays").size(), 1u);
  EXPECT_EQ(v.certificate.at("witness").at("point"), Json::array());
  EXPECT_TRUE(condition_star(phi, fan).is_proved());
}

TEST(LocalFiniteness, ConditionStarNeedsRecessionInSigma) {
  FamilyComplex phi = staircase();
  phi.finite_part = face_closure(1, {Polyhedron::from_generators(1, {{0}}, {{1}})});
  phi.families.erase(phi.families.begin());
  const Complex dense = face_closure(1, {Polyhedron::point({0})});
  try {
    condition_star(phi, dense);
    FAIL() << "expected RecessionNotInSigma";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RecessionNotInSigma);
  }
}

TEST(LocalFiniteness, FiniteComplexesAreAlwaysLocallyFinite) {
  Rng rng(67);
  for (int i = 0; i < 10; ++i) {
    const SliceInput in = random_input_1d(rng);
    const FamilyComplex phi = as_family_complex(in.phi);
    if (phi.finite_part.size() == 0) continue;
    EXPECT_TRUE(locally_finite_in_compactification(phi, in.sigma).is_proved());
  }
}
