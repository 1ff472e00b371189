// Rational and integral linear algebra on small dense matrices.
#pragma once

#include "toricval/exact.hpp"

#include <vector>

namespace toricval {

/// Reduced row echelon form; `pivots` receives the pivot column of each row.
std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t cols, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);
std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols);
/// Basis of {x : rows . x = 0}, as primitive integer vectors.
std::vector<IntVec> nullspace(const std::vector<RatVec>& rows, std::size_t cols);
Rat determinant(std::vector<RatVec> m);
Int determinant(const std::vector<IntVec>& m);

/// Result of column-reducing a basis of a sublattice L of Z^d.
struct LatticeQuotient {
  std::size_t rank = 0;            // rank of L
  std::size_t quotient_rank = 0;   // d - rank
  IntMatrix projection;            // quotient_rank x d, kernel = saturation of L
  IntMatrix section;               // d x quotient_rank, projection * section = I
  IntMatrix saturated_basis;       // rank rows spanning span(L) cap Z^d
};

LatticeQuotient snf_quotient(const std::vector<IntVec>& sublattice_basis, std::size_t d);

/// Z-basis of {x in Z^d : A x = 0} for an integer matrix A with d columns.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, std::size_t d);

IntVec mat_vec(const IntMatrix& m, const IntVec& v);
RatVec mat_vec(const IntMatrix& m, const RatVec& v);

}  // namespace toricval
