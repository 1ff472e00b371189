// SVG export of cells in dimension 1 or 2.
#pragma once

#include "toricval/families.hpp"

#include <optional>
#include <string>

namespace toricval {

struct Viewport {
  Rat xmin, xmax, ymin, ymax;
};

struct SvgCensus {
  std::size_t polygons = 0;
  std::size_t segments = 0;
  std::size_t points = 0;
};

struct Svg {
  std::string text;
  SvgCensus census;
};

/// One element per cell, clipped to the viewport, in input order; cells that
/// miss the viewport are skipped. Throws UnsupportedDimension for d > 2.
/// Without a viewport, the bounding box of all vertices padded by 1 is used.
Svg export_svg(std::size_t d, const std::vector<Polyhedron>& cells, const std::optional<Viewport>& view = std::nullopt);

/// Finite maximal cells followed by family members with n <= n_max.
std::vector<Polyhedron> render_cells(const FamilyComplex& phi, long n_max);

}  // namespace toricval
