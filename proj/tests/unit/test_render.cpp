#include "toricval/io.hpp"
#include "toricval/registry.hpp"
#include "toricval/render.hpp"

#include <gtest/gtest.h>

using namespace toricval;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, TriangleFaceClosure) {
  const Complex c = face_closure(2, {Polyhedron::from_generators(2, {{0, 0}, {1, 0}, {0, 1}})});
  const Svg svg = export_svg(2, c.cells);
  EXPECT_EQ(svg.census.polygons, 1u);
  EXPECT_EQ(svg.census.segments, 3u);
  EXPECT_EQ(svg.census.points, 3u);
  EXPECT_EQ(count(svg.text, "<polygon"), 1u);
  EXPECT_NE(svg.text.find("<svg"), std::string::npos);
}

TEST(Render, ClipsUnboundedCellsAndSkipsMisses) {
  const std::vector<Polyhedron> cells{Polyhedron::from_generators(2, {{0, 0}}, {{1, 0}, {0, 1}}),
                                      Polyhedron::point({10, 10})};
  const Svg svg = export_svg(2, cells, Viewport{-1, 1, -1, 1});
  EXPECT_EQ(svg.census.polygons, 1u);
  EXPECT_EQ(svg.census.points, 0u);
}

TEST(Render, OneDimensionalCells) {
  const std::vector<Polyhedron> cells{Polyhedron::from_generators(1, {{0}, {1}}), Polyhedron::point({2})};
  const Svg svg = export_svg(1, cells);
  EXPECT_EQ(svg.census.segments, 1u);
  EXPECT_EQ(svg.census.points, 1u);
}

TEST(Render, HigherDimensionIsUnsupported) {
  try {
    export_svg(3, {Polyhedron::point({0, 0, 0})});
    FAIL() << "expected UnsupportedDimension";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
  }
}

TEST(Render, StrataExampleMembers) {
  const Document d = document_from_json(example_document("ex-strata-accumulation"));
  const auto cells = render_cells(*d.family_complex, 4);
  EXPECT_EQ(cells.size(), 5u);  // the upper y-axis and P_1, ..., P_4
  const Svg svg = export_svg(2, cells, Viewport{0, Rat(6, 5), 0, 6});
  EXPECT_EQ(svg.census.polygons, 4u);
  EXPECT_EQ(svg.census.segments, 1u);
  EXPECT_EQ(svg.census.points, 0u);
}
