#include "generators.hpp"

#include "toricval/arrangement.hpp"
#include "toricval/complex.hpp"

#include <gtest/gtest.h>

using namespace toricval;
using namespace toricval::testing;

namespace {

Polyhedron seg(long a, long b) { return Polyhedron::from_generators(1, {{a}, {b}}); }
Polyhedron ray1(long a, long dir) { return Polyhedron::from_generators(1, {{a}}, {{dir}}); }
Polyhedron cone2(RatVec a, RatVec b) { return Polyhedron::from_generators(2, {{0, 0}}, {a, b}); }

}  // namespace

TEST(Complex, FaceClosureOfTriangle) {
  const Complex c = face_closure(2, {Polyhedron::from_generators(2, {{0, 0}, {1, 0}, {0, 1}})});
  EXPECT_EQ(c.size(), 7u);
  EXPECT_TRUE(c.added_faces);
  EXPECT_EQ(c.maximal_cells().size(), 1u);
}

TEST(Complex, ValidationDetectsOverlap) {
  EXPECT_TRUE(validate_complex(1, {seg(0, 1), seg(1, 2)}).is_proved());
  const Verdict bad = validate_complex(1, {seg(0, 2), seg(1, 3)});
  EXPECT_TRUE(bad.is_refuted());
  EXPECT_TRUE(validate_complex(2, {cone2({1, 0}, {0, 1}), cone2({0, 1}, {-1, 0})}).is_proved());
  EXPECT_TRUE(validate_complex(2, {cone2({1, 0}, {1, 2}), cone2({1, 1}, {0, 1})}).is_refuted());
}

TEST(Complex, FanValidation) {
  EXPECT_TRUE(validate_fan(1, {ray1(0, 1), ray1(0, -1)}).is_proved());
  EXPECT_THROW(validate_fan(1, {ray1(1, 1)}), Error);
  // a half-plane is not pointed
  const Polyhedron half = Polyhedron::from_rows(2, {{{1, 0}, 0}});
  EXPECT_FALSE(validate_fan(2, {half}).is_proved());
}

TEST(Complex, RecessionFanOfStaircase) {
  const Complex phi = face_closure(1, {ray1(-1, -1), seg(-1, 2), ray1(2, 1)});
  Complex fan;
  ASSERT_TRUE(recession_fan(phi, &fan).is_proved());
  EXPECT_EQ(fan.size(), 3u);
  EXPECT_TRUE(fan.has(ray1(0, 1)));
  EXPECT_TRUE(fan.has(ray1(0, -1)));
}

TEST(Complex, CommonRefinementOfSameSupport) {
  const Complex a = face_closure(1, {seg(0, 2), seg(2, 4)});
  const Complex b = face_closure(1, {seg(0, 1), seg(1, 4)});
  const Complex r = common_refinement(a, b);
  EXPECT_TRUE(validate_complex(1, r.cells).is_proved());
  EXPECT_EQ(r.maximal_cells().size(), 3u);
  EXPECT_TRUE(r.has(seg(1, 2)));
  for (const Rat x : {Rat(1, 2), Rat(3, 2), Rat(7, 2)}) EXPECT_TRUE(support_contains(r, {x}));
}

TEST(Complex, CombLocalFinitenessOfFiniteComplex) {
  const Complex c = face_closure(1, {seg(0, 1), seg(1, 2)});
  const Verdict v = comb_locally_finite(c);
  EXPECT_TRUE(v.is_proved());
  // [0,1] meets itself, both endpoints and [1,2]
  EXPECT_EQ(v.certificate.at("max_meet_count").get<long>(), 4);
}

TEST(Complex, IntersectsAndSupport) {
  EXPECT_TRUE(intersects(seg(0, 1), seg(1, 2)));
  EXPECT_FALSE(intersects(seg(0, 1), seg(2, 3)));
  const Complex c = face_closure(1, {seg(0, 1)});
  EXPECT_TRUE(support_contains(c, {Rat(1, 3)}));
  EXPECT_FALSE(support_contains(c, {Rat(4, 3)}));
}

TEST(Arrangement, CellCountsOfGenericLines) {
  // three lines in general position: 7 regions, 9 edges, 3 vertices
  const Complex c = arrangement_complex(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}});
  std::size_t by_dim[3] = {0, 0, 0};
  for (const auto& cell : c.cells) ++by_dim[cell.dim()];
  EXPECT_EQ(by_dim[2], 7u);
  EXPECT_EQ(by_dim[1], 9u);
  EXPECT_EQ(by_dim[0], 3u);
  EXPECT_TRUE(validate_complex(2, c.maximal_cells()).is_proved());
}

TEST(Arrangement, ParallelRowsMerge) {
  const Complex c = arrangement_complex(1, {{{1}, 0}, {{-2}, 0}, {{1}, 1}});
  EXPECT_EQ(c.maximal_cells().size(), 3u);
}

TEST(Complex, RandomCompleteFansAreValid) {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const Complex fan = random_complete_fan_2d(rng);
    EXPECT_TRUE(validate_fan(2, fan.maximal_cells()).is_proved());
  }
}
