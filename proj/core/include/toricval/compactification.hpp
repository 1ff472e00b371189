// The partial compactification N_R(Sigma), modeled stratum by stratum as the
// quotients N_R / span(sigma), and the local finiteness verdicts built on it.
#pragma once

#include "toricval/families.hpp"
#include "toricval/lattice.hpp"

#include <vector>

namespace toricval {

struct Stratum {
  Polyhedron sigma;
  IntMatrix projection;  // quotient_rank x d; the identity for sigma = {0}
  std::size_t rank = 0;  // dimension of the stratum

  bool is_dense() const { return sigma.dim() == 0; }
  RatVec project(const RatVec& w) const;
};

Stratum make_stratum(const Polyhedron& sigma);
/// One stratum per cone of the fan, the dense stratum first. The zero cone is
/// always present even if the fan omits it.
std::vector<Stratum> strata_of(const Complex& fan);

struct StratumPoint {
  Polyhedron sigma;
  RatVec point;
};

Json json_of(const StratumPoint& x);

/// rec(P) meets the relative interior of sigma.
bool closure_reaches(const Polyhedron& rec, const Polyhedron& sigma);
/// Whether y lies in the sigma-piece of cl(P).
bool closure_contains(const Polyhedron& p, const Stratum& s, const RatVec& y);

/// Nonempty pieces of cl(P), keyed by the cone of the stratum.
struct CompactifiedSet {
  std::vector<std::pair<Polyhedron, Polyhedron>> pieces;

  const Polyhedron* piece(const Polyhedron& sigma) const;
};

CompactifiedSet compactified_closure(const Polyhedron& p, const Complex& fan);

/// Limits (inside some stratum) at which the closures of a family's members pile up.
std::vector<StratumPoint> accumulation_points(const FamilyComplex& phi, const Complex& fan, long window = 8);

/// Throws StratumMismatch if x.sigma is not a cone of the fan or x.point has the wrong length.
Verdict locally_finite_at(const FamilyComplex& phi, const Complex& fan, const StratumPoint& x, long window = 8);

/// Local finiteness of the closures at points of their union.
Verdict closures_locally_finite_in_support(const FamilyComplex& phi, const Complex& fan, long window = 8);
/// Local finiteness of the closures at every point of N_R(Sigma).
Verdict locally_finite_in_compactification(const FamilyComplex& phi, const Complex& fan, long window = 8);

/// Throws RecessionNotInSigma.
Verdict condition_star(const FamilyComplex& phi, const Complex& fan, long window = 8);

/// Certificate carries nerve_components and union_components.
Verdict domain_isomorphism_verdict(const FamilyComplex& phi, const Complex& fan, long window = 8);

/// Wraps a finite complex.
FamilyComplex as_family_complex(const Complex& phi);

}  // namespace toricval
