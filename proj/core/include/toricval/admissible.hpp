// Gamma-admissible cones and fans in N_R x R_{>=0}. The last coordinate is t.
#pragma once

#include "toricval/complex.hpp"

#include <vector>

namespace toricval {

/// A fan in N_R x R_{>=0} together with its height slices.
struct HalfSpaceFan {
  std::size_t dim = 0;  // d; cones live in R^{d+1}
  Complex cones;
  Complex sigma;        // ht_0
  Complex phi;          // ht_1
};

/// A monomial term chi^u with coefficient valuation val.
struct MonomialTerm {
  IntVec u;
  Rat val;
};

Verdict is_gamma_admissible_cone(const Polyhedron& sigma, const GammaSpec& gamma);

/// c(P) = {(w,t) : <u,w> - gamma t >= 0, t >= 0}.
Polyhedron cone_over(const Polyhedron& p, const GammaSpec& gamma);
/// sigma x {0} for a cone sigma in N_R.
Polyhedron cone_at_zero(const Polyhedron& sigma);

/// pi(sigma cap {t = h}) for h in {0, 1}.
Polyhedron slice_at(const Polyhedron& sigma, int height);
/// Same slice through Fourier-Motzkin elimination of t; cross-check route.
Polyhedron slice_at_fm(const Polyhedron& sigma, int height);

/// Computes ht_0 and ht_1 and validates them (fan and complex).
Verdict height_slices(std::size_t d, const std::vector<Polyhedron>& cones, Complex* sigma, Complex* phi);

/// Builds {c(P)} cup {sigma x 0}. Throws RecessionNotInSigma naming the offending cell.
Verdict assemble_delta(const Complex& sigma, const Complex& phi, const GammaSpec& gamma, HalfSpaceFan* out);

/// sigma^v = {(u, g) : <u,w> + g t >= 0 on sigma}, one row per generator of sigma.
Polyhedron dual_cone(const Polyhedron& sigma);
/// sigma^v as the cone spanned by sigma's rows, computed by Fourier-Motzkin.
Polyhedron dual_cone_fm(const Polyhedron& sigma);

/// Minimal generators of sigma^v cap (M x Gamma) for Gamma = unit * Z, as integer
/// vectors (u, k) standing for (u, unit * k). Throws NonDiscreteGamma.
std::vector<IntVec> hilbert_basis(const Polyhedron& sigma, const GammaSpec& gamma);
/// Brute-force irreducibles of a pointed cone inside the box |x_i| <= bound; test oracle.
std::vector<IntVec> irreducibles_in_box(const Polyhedron& cone, long bound);

enum class MembershipRoute { DualDescription, LinearProgram };
bool semigroup_membership(const Polyhedron& sigma, const std::vector<MonomialTerm>& f,
                          MembershipRoute route = MembershipRoute::DualDescription);

/// Discrete Gamma: Proved. Otherwise every vertex of the height-1 slice must lie in N_Gamma.
Verdict is_finite_type(const Polyhedron& sigma, const GammaSpec& gamma);
Verdict is_finite_type(const std::vector<Polyhedron>& cones, const GammaSpec& gamma);
/// Smallest e >= 1 with e * x in Gamma for every coordinate of every vertex.
Int minimal_ramification(const std::vector<RatVec>& vertices, const GammaSpec& gamma);
Int minimal_ramification(const Complex& phi, const GammaSpec& gamma);

}  // namespace toricval
