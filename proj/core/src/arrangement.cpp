#include "toricval/arrangement.hpp"

#include <set>

namespace toricval {

std::vector<HalfSpace> coordinate_hyperplanes(std::size_t d) {
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < d; ++i) {
    RatVec e(d, Rat(0));
    e[i] = 1;
    out.push_back({std::move(e), Rat(0)});
  }
  return out;
}

Complex arrangement_complex(std::size_t d, const std::vector<HalfSpace>& hyperplanes) {
  std::set<std::pair<RatVec, Rat>> seen;
  std::vector<Polyhedron> cells{Polyhedron::whole(d)};
  for (const auto& h : hyperplanes) {
    if (is_zero(h.u)) continue;
    // Normalize so that the first nonzero coefficient is positive and primitive.
    Rat c = primitive_scale(h.u);
    RatVec u = c * h.u;
    Rat g = c * h.gamma;
    for (const auto& x : u) {
      if (x == 0) continue;
      if (x < 0) {
        u = Rat(-1) * u;
        g = -g;
      }
      break;
    }
    if (!seen.insert({u, g}).second) continue;
    std::vector<Polyhedron> next;
    for (const auto& cell : cells) {
      Polyhedron above = intersect(cell, Polyhedron::from_rows(d, {{u, g}}));
      Polyhedron below = intersect(cell, Polyhedron::from_rows(d, {{Rat(-1) * u, -g}}));
      if (above.is_full_dimensional() && below.is_full_dimensional()) {
        next.push_back(std::move(above));
        next.push_back(std::move(below));
      } else {
        next.push_back(cell);
      }
    }
    cells = std::move(next);
  }
  return face_closure(d, cells);
}

}  // namespace toricval
