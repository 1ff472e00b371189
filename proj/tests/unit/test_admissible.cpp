#include "generators.hpp"
#include "oracles.hpp"

#include "toricval/admissible.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace toricval;
using namespace toricval::testing;

namespace {

const GammaSpec kZ = GammaSpec::discrete();

Polyhedron seg(Rat a, Rat b) { return Polyhedron::from_generators(1, {{a}, {b}}); }
Polyhedron cone(std::size_t m, std::vector<RatVec> rays) {
  return Polyhedron::from_generators(m, {RatVec(m, Rat(0))}, std::move(rays));
}

}  // namespace

TEST(Admissible, ConeOverSegmentAndItsSlices) {
  const Polyhedron p = seg(1, 3);
  const Polyhedron c = cone_over(p, kZ);
  EXPECT_EQ(c, cone(2, {{1, 1}, {3, 1}}));
  EXPECT_EQ(slice_at(c, 1), p);
  EXPECT_EQ(slice_at(c, 0), Polyhedron::point({0}));
  EXPECT_EQ(slice_at_fm(c, 1), p);
  EXPECT_TRUE(is_gamma_admissible_cone(c, kZ).is_proved());
}

TEST(Admissible, ConeAtZero) {
  const Polyhedron ray = cone(1, {{-1}});
  const Polyhedron c = cone_at_zero(ray);
  EXPECT_EQ(c, cone(2, {{-1, 0}}));
  EXPECT_TRUE(slice_at(c, 1).is_empty());
  EXPECT_EQ(slice_at(c, 0), ray);
}

TEST(Admissible, LinesAndLowerHalfSpace) {
  const Polyhedron with_line = Polyhedron::from_rows(3, {{{0, 0, 1}, 0}});
  EXPECT_TRUE(is_gamma_admissible_cone(with_line, kZ).is_refuted());
  EXPECT_FALSE(slice_criterion(with_line, kZ));
  try {
    is_gamma_admissible_cone(cone(2, {{0, -1}}), kZ);
    FAIL() << "expected NotInUpperHalfSpace";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInUpperHalfSpace);
  }
  EXPECT_THROW(is_gamma_admissible_cone(seg(0, 1), kZ), Error);
}

TEST(Admissible, AgreesWithSliceCriterionOnRandomFans) {
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = 1 + i % 2;
    const GammaSpec gamma = random_gamma(rng);
    for (const auto& c : random_halfspace_cones(rng, d, gamma)) {
      EXPECT_EQ(is_gamma_admissible_cone(c, gamma).is_proved(), slice_criterion(c, gamma)) << to_string(c);
    }
  }
}

TEST(Admissible, HeightSlicesOfProjectiveLine) {
  const std::vector<Polyhedron> cones{cone_over(Polyhedron::from_generators(1, {{0}}, {{1}}), kZ),
                                      cone_over(Polyhedron::from_generators(1, {{0}}, {{-1}}), kZ)};
  Complex s0, s1;
  ASSERT_TRUE(height_slices(1, cones, &s0, &s1).is_proved());
  EXPECT_EQ(s0.maximal_cells().size(), 2u);
  EXPECT_EQ(s1.maximal_cells().size(), 2u);
  EXPECT_TRUE(s1.has(Polyhedron::point({0})));
}

TEST(Admissible, AssembleRejectsEscapingRecession) {
  const Complex sigma = face_closure(1, {Polyhedron::point({0})});
  const Complex phi = face_closure(1, {Polyhedron::from_generators(1, {{0}}, {{1}})});
  HalfSpaceFan out;
  try {
    assemble_delta(sigma, phi, kZ, &out);
    FAIL() << "expected RecessionNotInSigma";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RecessionNotInSigma);
  }
}

TEST(Admissible, AssembleRecoversItsSlices) {
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const SliceInput in = random_input_1d(rng);
    const HalfSpaceFan delta = assemble(in, kZ);
    Complex s0, s1;
    ASSERT_TRUE(height_slices(1, delta.cones.maximal_cells(), &s0, &s1).is_proved());
    EXPECT_EQ(s1.size(), in.phi.size());
    for (const auto& c : in.phi.cells) EXPECT_TRUE(s1.has(c));
  }
}

TEST(Dual, TwoRoutesAgree) {
  Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    const Polyhedron c = random_cone(rng, 2 + i % 2, i % 3 != 0);
    EXPECT_EQ(dual_cone(c), dual_cone_fm(c)) << to_string(c);
  }
}

TEST(Hilbert, KnownTwoDimensionalBasis) {
  // sigma = cone((1,0), (1,2)); its dual is cone((0,1), (2,-1))
  const Polyhedron sigma = cone(2, {{1, 0}, {1, 2}});
  std::vector<IntVec> hb = hilbert_basis(sigma, kZ);
  std::sort(hb.begin(), hb.end());
  EXPECT_EQ(hb, (std::vector<IntVec>{{0, 1}, {1, 0}, {2, -1}}));
  EXPECT_THROW(hilbert_basis(sigma, GammaSpec::divisible()), Error);
}

TEST(Hilbert, UnitChangesCoordinates) {
  // Gamma = (1/2) Z and sigma a ray: the dual is the half-plane 2u + k >= 0 in (u, k)
  const Polyhedron sigma = cone(2, {{1, 1}});
  const std::vector<IntVec> hb = hilbert_basis(sigma, GammaSpec::discrete(Rat(1, 2)));
  ASSERT_EQ(hb.size(), 3u);
  EXPECT_NE(std::find(hb.begin(), hb.end(), IntVec{1, -2}), hb.end());
  EXPECT_NE(std::find(hb.begin(), hb.end(), IntVec{-1, 2}), hb.end());
  long at_level_one = 0;
  for (const auto& h : hb) at_level_one += (2 * h[0] + h[1] == 1) ? 1 : 0;
  EXPECT_EQ(at_level_one, 1);
}

TEST(Hilbert, MatchesBruteForceIrreducibles) {
  Rng rng(53);
  for (int i = 0; i < 10; ++i) {
    Polyhedron sigma;
    do sigma = cone(2, {{uniform(rng, -3, 3), uniform(rng, 1, 3)}, {uniform(rng, -3, 3), uniform(rng, 0, 3)}});
    while (!sigma.is_full_dimensional());
    std::vector<LongVec> got;
    for (const auto& h : hilbert_basis(sigma, kZ)) {
      const LongVec v = to_long(h);
      if (std::abs(v[0]) <= 4 && v[1] >= 0 && v[1] <= 4) got.push_back(v);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, monoid_oracle(sigma.rays(), 4, 4).irreducibles) << to_string(sigma);
  }
}

TEST(Membership, RoutesAgreeOnHandPickedTerms) {
  const Polyhedron sigma = cone(2, {{1, 1}, {-1, 1}});
  for (const auto& [u, val, want] : std::vector<std::tuple<long, Rat, bool>>{
           {0, 0, true}, {1, 1, true}, {1, Rat(1, 2), false}, {-2, 2, true}, {-2, Rat(3, 2), false}}) {
    const std::vector<MonomialTerm> f{{IntVec{u}, val}};
    EXPECT_EQ(semigroup_membership(sigma, f, MembershipRoute::DualDescription), want) << u << " " << val;
    EXPECT_EQ(semigroup_membership(sigma, f, MembershipRoute::LinearProgram), want) << u << " " << val;
  }
}

TEST(FiniteType, VerticesOutsideGamma) {
  const GammaSpec z2 = GammaSpec::prime_localized({2});
  const Polyhedron c = cone_over(seg(Rat(1, 3), 1), z2);
  const Verdict v = is_finite_type(c, z2);
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(v.certificate.at("suggested_e"), "3");
  EXPECT_TRUE(is_finite_type(c, kZ).is_proved());
  EXPECT_TRUE(is_finite_type(cone_over(seg(Rat(1, 4), 1), z2), z2).is_proved());
}

TEST(FiniteType, MinimalRamification) {
  EXPECT_EQ(minimal_ramification({{Rat(1, 3)}, {Rat(1, 4)}}, kZ), Int(12));
  EXPECT_EQ(minimal_ramification({{Rat(1, 3)}, {Rat(1, 4)}}, GammaSpec::prime_localized({2})), Int(3));
  EXPECT_EQ(minimal_ramification({{Rat(1, 3)}}, GammaSpec::divisible()), Int(1));
}
