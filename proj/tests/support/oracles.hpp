// Brute-force and alternative-route oracles. They avoid the code paths they check.
#pragma once

#include "toricval/compactification.hpp"

#include <optional>

namespace toricval::testing {

using LongVec = std::vector<long>;

/// Pointed iff the row normals (inequalities and equalities) span R^d.
bool pointed_by_rank(const Polyhedron& p);
/// Some positive multiple of the row has an integer normal and a constant in Gamma.
bool row_is_gamma_rational(const HalfSpace& h, const GammaSpec& gamma);

/// The slice criterion for one cone in R^{d+1}, using Fourier-Motzkin slices: the
/// t = 0 slice is pointed and the t = 1 slice is empty or pointed with Gamma-rational rows.
bool slice_criterion(const Polyhedron& cone, const GammaSpec& gamma);
/// The same criterion for a whole fan: ht_0 is a fan and ht_1 a complex of such cells.
bool slice_criterion_fan(std::size_t d, const std::vector<Polyhedron>& cones, const GammaSpec& gamma);

/// The monoid {y in Z^m : <y, r> >= 0 for every generator r}, for a full-dimensional
/// pointed cone given by generators. Irreducible elements with |y_i| <= u_bound on
/// the first m-1 coordinates and 0 <= y_last <= last_bound.
struct MonoidOracle {
  std::vector<LongVec> generators;
  LongVec interior;                 // sum of the generators
  std::vector<LongVec> box_points;  // monoid elements inside the box
  std::vector<LongVec> irreducibles;
};
MonoidOracle monoid_oracle(const std::vector<IntVec>& generators, long u_bound, long last_bound);
/// x is a nonnegative integer combination of the basis (memoized search).
bool decomposes(const LongVec& x, const std::vector<LongVec>& basis, const MonoidOracle& monoid);
LongVec to_long(const IntVec& v);

/// The term pairs nonnegatively with every listed generator.
bool member_by_generators(const std::vector<IntVec>& generators, const IntVec& u, const Rat& val);

/// The cone of the fan whose relative interior contains v, if any.
std::optional<Polyhedron> carrier_cone(const Complex& fan, const RatVec& v);
/// A point x of p with proj(x) = y, by LP.
std::optional<RatVec> lift_point(const Polyhedron& p, const IntMatrix& proj, const RatVec& y);
/// A direction of rec(p) in the relative interior of sigma, by LP.
std::optional<RatVec> escape_direction(const Polyhedron& p, const Polyhedron& sigma);

}  // namespace toricval::testing
