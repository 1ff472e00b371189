#include "toricval/complex.hpp"

#include "toricval/lp.hpp"

#include <algorithm>
#include <map>

namespace toricval {

std::vector<Polyhedron> Complex::maximal_cells() const {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (maximal[i]) out.push_back(cells[i]);
  }
  return out;
}

std::size_t Complex::find(const Polyhedron& p) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].key() == p.key()) return i;
  }
  return cells.size();
}

Complex face_closure(std::size_t dim, const std::vector<Polyhedron>& cells) {
  std::map<std::string, Polyhedron> all;
  std::map<std::string, bool> is_proper_face;
  std::map<std::string, bool> expanded;
  for (const auto& c : cells) {
    if (c.ambient_dim() != dim) throw Error(ErrorKind::Input, "cell dimension does not match the complex");
    if (c.is_empty() || expanded[c.key()]) continue;
    expanded[c.key()] = true;
    for (auto& f : faces(c)) {
      const std::string k = f.key();
      if (k != c.key()) is_proper_face[k] = true;
      all.emplace(k, std::move(f));
    }
  }
  Complex out;
  out.dim = dim;
  std::vector<const Polyhedron*> sorted;
  for (const auto& [k, p] : all) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Polyhedron* a, const Polyhedron* b) {
    if (a->dim() != b->dim()) return a->dim() < b->dim();
    return a->key() < b->key();
  });
  std::size_t input_distinct = 0;
  for (const auto& [k, e] : expanded) input_distinct += e ? 1 : 0;
  for (const Polyhedron* p : sorted) {
    out.cells.push_back(*p);
    out.maximal.push_back(!is_proper_face[p->key()]);
  }
  out.added_faces = out.cells.size() > input_distinct;
  return out;
}

bool intersects(const Polyhedron& a, const Polyhedron& b) {
  if (a.is_empty() || b.is_empty()) return false;
  std::vector<HalfSpace> ineqs = a.ineqs();
  ineqs.insert(ineqs.end(), b.ineqs().begin(), b.ineqs().end());
  std::vector<HalfSpace> eqs = a.eqs();
  eqs.insert(eqs.end(), b.eqs().begin(), b.eqs().end());
  return is_feasible(a.ambient_dim(), ineqs, eqs);
}

Verdict validate_complex(std::size_t dim, const std::vector<Polyhedron>& cells, Complex* closed) {
  Complex c = face_closure(dim, cells);
  std::vector<Polyhedron> maxi = c.maximal_cells();
  Verdict v = Verdict::proved();
  for (std::size_t i = 0; i < maxi.size() && v.is_proved(); ++i) {
    for (std::size_t j = i + 1; j < maxi.size(); ++j) {
      if (!intersects(maxi[i], maxi[j])) continue;
      Polyhedron x = intersect(maxi[i], maxi[j]);
      if (is_face_of(x, maxi[i]) && is_face_of(x, maxi[j])) continue;
      v = Verdict::refuted("intersection of two cells is not a common face",
                           Json{{"cells", Json::array({json_of(maxi[i]), json_of(maxi[j])})},
                                {"intersection", json_of(x)}});
      break;
    }
  }
  if (v.is_proved()) {
    v.certificate["cells"] = c.cells.size();
    v.certificate["maximal_cells"] = maxi.size();
    v.certificate["faces_added"] = c.added_faces;
  }
  if (closed) *closed = std::move(c);
  return v;
}

Verdict validate_fan(std::size_t dim, const std::vector<Polyhedron>& cones, Complex* closed) {
  for (const auto& c : cones) {
    if (!c.is_cone()) throw Error(ErrorKind::NotACone, "not a cone: " + to_string(c));
  }
  Complex c;
  Verdict v = validate_complex(dim, cones, &c);
  if (v.is_proved()) {
    for (const auto& cell : c.cells) {
      if (!cell.is_pointed()) {
        v = Verdict::refuted("cone is not pointed",
                             Json{{"cone", json_of(cell)}, {"line", json_of(cell.lineality().front())}});
        break;
      }
    }
  }
  if (closed) *closed = std::move(c);
  return v;
}

Verdict recession_fan(const Complex& phi, Complex* fan) {
  std::vector<Polyhedron> recs;
  for (const auto& p : phi.cells) recs.push_back(recession_cone(p));
  Complex c;
  Verdict v = validate_fan(phi.dim, recs, &c);
  if (v.is_proved()) v.certificate["cones"] = c.cells.size();
  if (fan) *fan = std::move(c);
  return v;
}

Complex common_refinement(const Complex& a, const Complex& b) {
  if (a.dim != b.dim) throw Error(ErrorKind::Input, "common_refinement: dimension mismatch");
  std::vector<Polyhedron> cells;
  for (const auto& p : a.maximal_cells()) {
    for (const auto& q : b.maximal_cells()) {
      if (!intersects(p, q)) continue;
      cells.push_back(intersect(p, q));
    }
  }
  return face_closure(a.dim, cells);
}

Verdict comb_locally_finite(const Complex& phi) {
  Json counts = Json::array();
  std::size_t best = 0;
  for (std::size_t i = 0; i < phi.cells.size(); ++i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < phi.cells.size(); ++j) {
      if (i == j || intersects(phi.cells[i], phi.cells[j])) ++n;
    }
    counts.push_back(n);
    best = std::max(best, n);
  }
  return Verdict::proved(Json{{"meet_counts", counts}, {"max_meet_count", best}});
}

bool support_contains(const Complex& phi, const RatVec& x) {
  return std::any_of(phi.cells.begin(), phi.cells.end(), [&](const Polyhedron& p) { return contains(p, x); });
}

}  // namespace toricval
