// Motzkin double description for polyhedral cones {x : A x >= 0}.
#pragma once

#include "toricval/exact.hpp"

#include <vector>

namespace toricval {

struct ConeGenerators {
  std::vector<IntVec> rays;       // extreme rays modulo the lineality space, primitive
  std::vector<IntVec> lineality;  // basis of the lineality space, primitive
};

/// Generators of {x in R^dim : a . x >= 0 for a in ineqs, a . x = 0 for a in eqs}.
ConeGenerators cone_generators(const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs, std::size_t dim);

}  // namespace toricval
