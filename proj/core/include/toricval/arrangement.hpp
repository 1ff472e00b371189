// Polyhedral complexes cut out by finite hyperplane arrangements.
#pragma once

#include "toricval/complex.hpp"

#include <vector>

namespace toricval {

/// The face closure of the full-dimensional cells of the arrangement of
/// hyperplanes <u, w> = gamma. Rows differing by a positive or negative
/// scalar describe the same hyperplane and are merged.
Complex arrangement_complex(std::size_t d, const std::vector<HalfSpace>& hyperplanes);

/// The hyperplanes x_i = 0.
std::vector<HalfSpace> coordinate_hyperplanes(std::size_t d);

}  // namespace toricval
