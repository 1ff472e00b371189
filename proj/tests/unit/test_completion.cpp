#include "generators.hpp"

#include "toricval/compactification.hpp"
#include "toricval/completion.hpp"

#include <gtest/gtest.h>

using namespace toricval;
using namespace toricval::testing;

namespace {

const GammaSpec kZ = GammaSpec::discrete();

Polyhedron seg(Rat a, Rat b) { return Polyhedron::from_generators(1, {{a}, {b}}); }
Polyhedron half_line(Rat a, long dir) { return Polyhedron::from_generators(1, {{a}}, {{dir}}); }
Polyhedron cone2(std::vector<RatVec> rays) { return Polyhedron::from_generators(2, {{0, 0}}, std::move(rays)); }

Complex dense(std::size_t d) { return face_closure(d, {Polyhedron::point(RatVec(d, Rat(0)))}); }
Complex line_fan() { return face_closure(1, {half_line(0, 1), half_line(0, -1)}); }
Complex quadrants() {
  return face_closure(2, {cone2({{1, 0}, {0, 1}}), cone2({{0, 1}, {-1, 0}}), cone2({{-1, 0}, {0, -1}}),
                          cone2({{0, -1}, {1, 0}})});
}

bool all_proved(const ModelReport& r) {
  for (const auto& [name, v] : r.verdicts) {
    if (!v.is_proved()) return false;
  }
  return true;
}

}  // namespace

TEST(CompleteFan, FillsGapsInTheLine) {
  const FanCompletion c = complete_fan(face_closure(1, {half_line(0, 1)}));
  EXPECT_FALSE(c.weak);
  EXPECT_TRUE(c.fan.has(half_line(0, -1)));
}

TEST(CompleteFan, PlaneFansBecomeComplete) {
  Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    const Complex sigma = random_fan_2d(rng);
    const FanCompletion c = complete_fan(sigma);
    EXPECT_FALSE(c.weak);
    EXPECT_TRUE(is_complete_fan_2d(c.fan));
    EXPECT_TRUE(validate_fan(2, c.fan.maximal_cells()).is_proved());
    for (const auto& cell : sigma.cells) EXPECT_TRUE(c.fan.has(cell)) << to_string(cell);
  }
  EXPECT_FALSE(is_complete_fan_2d(face_closure(2, {cone2({{1, 0}, {0, 1}})})));
  EXPECT_TRUE(is_complete_fan_2d(quadrants()));
}

TEST(CompleteFan, ThreeDimensionalInputIsWeak) {
  const Polyhedron orthant = Polyhedron::from_generators(3, {{0, 0, 0}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(complete_fan(face_closure(3, {orthant})).weak);
}

TEST(CompleteComplex, SegmentUnderProjectiveLine) {
  const Completion c = complete_complex(face_closure(1, {seg(0, 1)}), line_fan(), kZ);
  EXPECT_EQ(c.kind, CompletionKind::Finite);
  const auto cells = c.complex.finite_part.maximal_cells();
  EXPECT_EQ(cells.size(), 3u);
  EXPECT_TRUE(c.complex.finite_part.has(half_line(1, 1)));
  EXPECT_TRUE(c.complex.finite_part.has(half_line(0, -1)));
}

TEST(CompleteComplex, DenseFanNeedsFamilies) {
  const Complex phi = face_closure(1, {seg(0, 1)});
  const Completion c = complete_complex(phi, dense(1), kZ);
  EXPECT_EQ(c.kind, CompletionKind::Families);
  EXPECT_EQ(c.complex.families.size(), 2u);
  EXPECT_TRUE(validate_completion(c.complex, phi, dense(1), kZ).is_proved());
}

TEST(CompleteComplex, RejectsRecessionOutsideSigma) {
  try {
    complete_complex(face_closure(1, {half_line(0, 1)}), dense(1), kZ);
    FAIL() << "expected RecessionNotInSigma";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RecessionNotInSigma);
  }
}

TEST(CompleteComplex, TriangleInsideQuadrants) {
  const Complex phi = face_closure(2, {Polyhedron::from_generators(2, {{0, 0}, {1, 0}, {0, 1}})});
  const Completion c = complete_complex(phi, quadrants(), kZ);
  EXPECT_EQ(c.kind, CompletionKind::Finite);
  EXPECT_TRUE(validate_completion(c.complex, phi, quadrants(), kZ).is_proved());
}

TEST(ValidateCompletion, GapIsRefuted) {
  const Complex phi = face_closure(1, {seg(0, 1), half_line(0, -1)});
  const Verdict v = validate_completion(as_family_complex(phi), phi, line_fan(), kZ);
  ASSERT_TRUE(v.is_refuted());
}

TEST(ValidateCompletion, MissingInputCellIsRefuted) {
  const Complex phi = face_closure(1, {seg(0, 2)});
  const Complex other = face_closure(1, {half_line(0, -1), seg(0, 1), half_line(1, 1)});
  EXPECT_TRUE(validate_completion(as_family_complex(other), phi, line_fan(), kZ).is_refuted());
}

TEST(ValidateCompletion, VerticesOutsideGammaForNonDiscreteGroup) {
  const GammaSpec z3 = GammaSpec::prime_localized({3});
  const Complex phi = face_closure(1, {seg(0, Rat(1, 2))});
  const Verdict v = vertices_in_gamma(as_family_complex(phi), z3);
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(v.certificate.at("suggested_e"), "2");
  EXPECT_TRUE(vertices_in_gamma(as_family_complex(phi), kZ).is_proved());
  const Complex full = face_closure(1, {half_line(0, -1), seg(0, Rat(1, 2)), half_line(Rat(1, 2), 1)});
  EXPECT_TRUE(validate_completion(as_family_complex(full), phi, line_fan(), z3).is_refuted());
}

TEST(CompleteModel, ConeOverUnitSegment) {
  HalfSpaceFan delta;
  delta.dim = 1;
  ASSERT_TRUE(validate_fan(2, {cone_over(seg(0, 1), kZ)}, &delta.cones).is_proved());
  const ModelReport r = complete_model(delta, kZ);
  EXPECT_EQ(r.e, Int(1));
  EXPECT_TRUE(all_proved(r));
  EXPECT_TRUE(r.subfan);
  EXPECT_TRUE(r.ht0_preserved);
  EXPECT_TRUE(r.overall().is_proved());
}

TEST(CompleteModel, RamifiesForThirdsOverDyadics) {
  const GammaSpec z2 = GammaSpec::prime_localized({2});
  HalfSpaceFan delta;
  delta.dim = 1;
  validate_fan(2, {cone_over(half_line(Rat(1, 3), 1), z2), cone_at_zero(half_line(0, 1))}, &delta.cones);
  const ModelReport r = complete_model(delta, z2);
  EXPECT_EQ(r.e, Int(3));
  EXPECT_EQ(r.gamma_effective, z2.scaled_down(3));
  EXPECT_TRUE(r.overall().is_proved());
}

TEST(CompleteModel, InadmissibleInputStopsEarly) {
  HalfSpaceFan delta;
  delta.dim = 1;
  delta.cones = face_closure(2, {Polyhedron::from_rows(2, {{{0, 1}, 0}})});
  const ModelReport r = complete_model(delta, kZ);
  EXPECT_FALSE(r.verdicts.at("admissible").is_proved());
  EXPECT_TRUE(r.verdicts.at("completion_valid").is_unknown());
}

TEST(CompleteModel, RandomOneDimensionalInputs) {
  Rng rng(73);
  for (int i = 0; i < 15; ++i) {
    const GammaSpec gamma = random_gamma(rng);
    const ModelReport r = complete_model(assemble(random_input_1d(rng), gamma), gamma);
    EXPECT_TRUE(r.overall().is_proved()) << to_json(r.overall()).dump();
  }
}

TEST(Algebraize, ProjectiveLineAndQuadrants) {
  for (const Complex& sigma : {dense(1), line_fan(), quadrants()}) {
    const ModelReport r = algebraize(sigma, kZ);
    EXPECT_TRUE(r.overall().is_proved());
    ASSERT_TRUE(r.sigma_prime.has_value());
    for (const auto& c : sigma.cells) EXPECT_TRUE(r.sigma_prime->fan.has(c));
  }
}
