// Finite polyhedral complexes and fans.
#pragma once

#include "toricval/polyhedron.hpp"
#include "toricval/verdict.hpp"

#include <vector>

namespace toricval {

/// A face-closed set of distinct nonempty polyhedra, sorted by (dimension, key).
struct Complex {
  std::size_t dim = 0;
  std::vector<Polyhedron> cells;
  std::vector<bool> maximal;  // parallel to cells
  bool added_faces = false;   // the input was not face-closed

  std::size_t size() const { return cells.size(); }
  std::vector<Polyhedron> maximal_cells() const;
  /// Index of the cell with this key, or size() when absent.
  std::size_t find(const Polyhedron& p) const;
  bool has(const Polyhedron& p) const { return find(p) < size(); }
};

Complex face_closure(std::size_t dim, const std::vector<Polyhedron>& cells);

/// Proved iff the face closure satisfies the complex axioms; Refuted names a
/// pair of maximal cells whose intersection is not a face of both.
Verdict validate_complex(std::size_t dim, const std::vector<Polyhedron>& cells, Complex* closed = nullptr);
/// validate_complex plus pointedness. Throws NotACone if some cell has a nonzero constant.
Verdict validate_fan(std::size_t dim, const std::vector<Polyhedron>& cones, Complex* closed = nullptr);

Verdict recession_fan(const Complex& phi, Complex* fan = nullptr);
Complex common_refinement(const Complex& a, const Complex& b);
/// Always Proved for finite complexes; the certificate lists per-cell meet counts.
Verdict comb_locally_finite(const Complex& phi);
bool support_contains(const Complex& phi, const RatVec& x);

/// Cheap nonempty-intersection test by LP.
bool intersects(const Polyhedron& a, const Polyhedron& b);

}  // namespace toricval
