// Seeded random inputs shared by the unit tests, the acceptance suite and the benchmarks.
#pragma once

#include "toricval/admissible.hpp"

#include <random>

namespace toricval::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
Rat random_rat(Rng& rng, long lo, long hi, long max_den);
/// Z, Q or Z[1/2], uniformly.
GammaSpec random_gamma(Rng& rng);

/// Nonzero integer vector with entries in [-bound, bound].
IntVec random_direction(Rng& rng, std::size_t d, long bound);
/// Bounded if max_rays = 0; rays lie in an open half-space, so the result is pointed.
Polyhedron random_pointed_polyhedron(Rng& rng, std::size_t d, std::size_t max_rays = 2);
/// Pointed cone in R^d spanned by up to d+1 small rays; full-dimensional if asked.
Polyhedron random_cone(Rng& rng, std::size_t d, bool full_dim);

/// Rays sorted counterclockwise with every consecutive angle below pi, and their 2-cones.
Complex random_complete_fan_2d(Rng& rng);
/// A random subfan of a random complete fan.
Complex random_fan_2d(Rng& rng);

struct SliceInput {
  Complex sigma;
  Complex phi;
};

/// d = 1: intervals, points and rays between random breakpoints; Sigma contains every rec.
SliceInput random_input_1d(Rng& rng);
/// d = 2 with Sigma complete: bounded arrangement cells, cones of Sigma, or a translate of Sigma.
SliceInput random_input_2d(Rng& rng);

/// Assembles the fan {c(P)} cup {sigma x 0}; aborts the test binary if that fails.
HalfSpaceFan assemble(const SliceInput& in, const GammaSpec& gamma);

/// Admissible fans from random slice inputs, sometimes with an extra cone that contains a line.
std::vector<Polyhedron> random_halfspace_cones(Rng& rng, std::size_t d, const GammaSpec& gamma);

}  // namespace toricval::testing
