// One-parameter families of cells with rational-function data in n.
#pragma once

#include "toricval/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricval {

/// <u(n), w> >= gamma(n) (or = for equality templates).
struct TemplateRow {
  std::vector<Poly> u;
  RatFun gamma;
};

/// The cells P_n, n >= n_min.
struct FamilyCell {
  std::size_t dim = 0;
  std::vector<TemplateRow> ineqs;
  std::vector<TemplateRow> eqs;
  long n_min = 0;
  std::string label;
};

/// A finite complex together with finitely many families.
struct FamilyComplex {
  std::size_t dim = 0;
  Complex finite_part;
  std::vector<FamilyCell> families;

  bool is_finite() const { return families.empty(); }
};

HalfSpace eval_row(const TemplateRow& row, long n);
/// Exact instantiation P_n. Throws OutOfDomain for n < n_min.
Polyhedron family_eval(const FamilyCell& f, long n);
/// P_n has the same key for three consecutive samples starting at n_min.
bool is_constant_family(const FamilyCell& f);

/// Complex axioms on the window [n_min, n_min + window + 1] together with the
/// finite part, plus stability of the (n, n+1) intersection pattern and of
/// the vertex paths. Refuted carries the index n of the failing pair.
Verdict family_validate(const FamilyComplex& phi, long window);

/// A vertex of P_n as a function of n, with the template rows tight on it.
struct VertexPath {
  RatFunVec coords;
  std::vector<std::size_t> active;
};

RatVec eval(const RatFunVec& v, long n);
std::vector<RfLimit> limits(const RatFunVec& v);
bool all_finite(const std::vector<RfLimit>& lim);
RatVec finite_values(const std::vector<RfLimit>& lim);

/// Vertex paths solved at n_min by Cramer's rule over rational functions and
/// checked against P_n for n up to n_min + window. nullopt if the vertex set
/// is not described by the same active sets throughout.
std::optional<std::vector<VertexPath>> vertex_paths(const FamilyCell& f, long window);

/// rec(P_n), constant for valid families; computed at n_min.
Polyhedron family_recession(const FamilyCell& f);

/// Finite part plus every P_n with n <= n_max.
std::vector<Polyhedron> truncation(const FamilyComplex& phi, long n_max);

}  // namespace toricval
