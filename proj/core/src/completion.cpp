#include "toricval/completion.hpp"

#include "toricval/arrangement.hpp"
#include "toricval/compactification.hpp"
#include "toricval/lattice.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace toricval {

std::string_view to_string(CompletionKind k) {
  switch (k) {
    case CompletionKind::Finite: return "Finite";
    case CompletionKind::Families: return "Families";
    case CompletionKind::WeakOnly: return "WeakOnly";
  }
  return "WeakOnly";
}

namespace {

Int cross(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counterclockwise order starting from the positive x-axis.
bool angle_less(const IntVec& a, const IntVec& b) {
  auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

std::vector<IntVec> sorted_rays(const Complex& sigma) {
  std::set<IntVec> rays;
  for (const auto& c : sigma.cells) {
    if (c.dim() == 1) rays.insert(c.rays().begin(), c.rays().end());
  }
  std::vector<IntVec> out(rays.begin(), rays.end());
  std::sort(out.begin(), out.end(), angle_less);
  return out;
}

Polyhedron cone2(const IntVec& a, const IntVec& b) {
  return Polyhedron::from_generators(2, {RatVec(2, Rat(0))}, {to_rat(a), to_rat(b)});
}

Polyhedron half_line(int sign_dir) { return Polyhedron::from_generators(1, {RatVec{Rat(0)}}, {RatVec{Rat(sign_dir)}}); }

std::set<std::string> keys_of(const Complex& c) {
  std::set<std::string> out;
  for (const auto& p : c.cells) out.insert(p.key());
  return out;
}

std::set<std::string> fan_keys(const Complex& sigma) {
  std::set<std::string> out = keys_of(sigma);
  out.insert(Polyhedron::point(RatVec(sigma.dim, Rat(0))).key());
  return out;
}

}  // namespace

bool is_complete_fan_2d(const Complex& sigma) {
  if (sigma.dim != 2) return false;
  auto rays = sorted_rays(sigma);
  if (rays.size() < 3) return false;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const IntVec& a = rays[i];
    const IntVec& b = rays[(i + 1) % rays.size()];
    if (cross(a, b) <= 0 || !sigma.has(cone2(a, b))) return false;
  }
  return true;
}

FanCompletion complete_fan(const Complex& sigma) {
  const std::size_t d = sigma.dim;
  FanCompletion out;
  std::vector<Polyhedron> cells = sigma.cells;
  cells.push_back(Polyhedron::point(RatVec(d, Rat(0))));
  if (d == 1) {
    Json added = Json::array();
    for (int s : {1, -1}) {
      Polyhedron h = half_line(s);
      if (!sigma.has(h)) {
        cells.push_back(h);
        added.push_back(s);
      }
    }
    out.fan = face_closure(1, cells);
    out.certificate = Json{{"added_half_lines", added}};
    return out;
  }
  if (d == 2) {
    std::vector<IntVec> rays = sorted_rays(sigma);
    Json inserted = Json::array();
    if (rays.empty()) {
      rays.push_back(IntVec{1, 0});
      inserted.push_back(json_of(rays.back()));
    }
    for (;;) {
      bool changed = false;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        const IntVec a = rays[i];
        const IntVec& b = rays[(i + 1) % rays.size()];
        if (rays.size() > 1 && cross(a, b) > 0) continue;
        IntVec perp{-a[1], a[0]};
        rays.push_back(perp);
        std::sort(rays.begin(), rays.end(), angle_less);
        inserted.push_back(json_of(perp));
        changed = true;
        break;
      }
      if (!changed) break;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) cells.push_back(cone2(rays[i], rays[(i + 1) % rays.size()]));
    out.fan = face_closure(2, cells);
    std::size_t covered = 0;
    const std::vector<RatVec> samples{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (const auto& dir : samples) {
      covered += std::any_of(out.fan.cells.begin(), out.fan.cells.end(),
                             [&](const Polyhedron& c) { return c.dim() == 2 && contains(c, dir); })
                     ? 1
                     : 0;
    }
    out.certificate = Json{{"inserted_rays", inserted},
                           {"two_cones", rays.size()},
                           {"consecutive_angles_below_pi", true},
                           {"sample_directions_covered", covered},
                           {"sample_directions", samples.size()}};
    return out;
  }
  // Weak: refine the arrangement of all cone hyperplanes and coordinate hyperplanes.
  std::vector<HalfSpace> hyperplanes = coordinate_hyperplanes(d);
  for (const auto& c : sigma.cells) {
    for (const auto& h : c.ineqs()) hyperplanes.push_back(h);
    for (const auto& h : c.eqs()) hyperplanes.push_back(h);
  }
  out.fan = arrangement_complex(d, hyperplanes);
  out.weak = true;
  out.certificate = Json{{"weak", true}, {"hyperplanes", hyperplanes.size()}};
  return out;
}

namespace {

TemplateRow affine_row(const Rat& coeff, const Rat& c0, const Rat& c1, long n_min) {
  return TemplateRow{{Poly::constant(coeff)}, RatFun::polynomial(Poly({c0, c1}), n_min)};
}

// [a + (n-1)s, a + ns] for n >= 1.
FamilyCell right_translates(const Rat& a, const Rat& s) {
  FamilyCell f;
  f.dim = 1;
  f.n_min = 1;
  f.label = "right";
  f.ineqs.push_back(affine_row(1, a - s, s, 1));
  f.ineqs.push_back(affine_row(-1, -a, -s, 1));
  return f;
}

// [a - (n+1)s, a - ns] for n >= 0.
FamilyCell left_translates(const Rat& a, const Rat& s) {
  FamilyCell f;
  f.dim = 1;
  f.n_min = 0;
  f.label = "left";
  f.ineqs.push_back(affine_row(1, a - s, -s, 0));
  f.ineqs.push_back(affine_row(-1, -a, s, 0));
  return f;
}

Completion complete_1d(const Complex& phi, const Complex& sigma, const GammaSpec& gamma) {
  std::vector<Polyhedron> cells = phi.cells;
  std::set<Rat> vset;
  bool plus_ray = false, minus_ray = false;
  for (const auto& c : phi.cells) {
    for (const auto& p : c.points()) vset.insert(p[0]);
    for (const auto& r : c.rays()) (r[0] > 0 ? plus_ray : minus_ray) = true;
  }
  if (vset.empty()) {
    vset.insert(Rat(0));
    cells.push_back(Polyhedron::point({Rat(0)}));
  }
  std::vector<Rat> verts(vset.begin(), vset.end());
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    Polyhedron seg = Polyhedron::from_generators(1, {{verts[i]}, {verts[i + 1]}});
    if (!phi.has(seg)) cells.push_back(std::move(seg));
  }
  const Rat s = gamma.step();
  std::vector<FamilyCell> families;
  if (!plus_ray) {
    if (sigma.has(half_line(1))) {
      cells.push_back(Polyhedron::from_generators(1, {{verts.back()}}, {RatVec{Rat(1)}}));
    } else {
      families.push_back(right_translates(verts.back(), s));
    }
  }
  if (!minus_ray) {
    if (sigma.has(half_line(-1))) {
      cells.push_back(Polyhedron::from_generators(1, {{verts.front()}}, {RatVec{Rat(-1)}}));
    } else {
      families.push_back(left_translates(verts.front(), s));
    }
  }
  Completion out;
  out.complex.dim = 1;
  out.complex.finite_part = face_closure(1, cells);
  out.complex.families = std::move(families);
  out.kind = out.complex.families.empty() ? CompletionKind::Finite : CompletionKind::Families;
  return out;
}

// ---------------------------------------------------------------------------
// d = 2, Sigma complete: constrained triangulation of the upper half of the
// sphere of directions in R^3 whose points are the homogenized vertices of Phi
// and the rays of Sigma at height zero.

Int det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

IntVec cross3(const IntVec& a, const IntVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int idot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// p = la * a + mu * b with la, mu > 0.
bool strictly_between(const IntVec& a, const IntVec& b, const IntVec& p) {
  if (det3(a, b, p) != 0) return false;
  IntVec c = cross3(a, b);
  return idot(cross3(p, b), c) > 0 && idot(cross3(a, p), c) > 0;
}

// Arcs ab and cd meet in a point interior to both.
bool arcs_cross(const IntVec& a, const IntVec& b, const IntVec& c, const IntVec& d) {
  const int l1 = sign(det3(b, c, d));
  const int l2 = -sign(det3(a, c, d));
  const int l3 = sign(det3(a, b, d));
  const int l4 = -sign(det3(a, b, c));
  if (l1 == 0 || l2 == 0 || l3 == 0 || l4 == 0) return false;
  return l1 == l2 && l3 == l4 && l1 == -l3;
}

class SphereTriangulation {
 public:
  SphereTriangulation(std::vector<IntVec> points, std::vector<Polyhedron> holes)
      : pts_(std::move(points)), holes_(std::move(holes)) {}

  void force(std::size_t i, std::size_t j) { arcs_.insert(key(i, j)); }

  void saturate() {
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      for (std::size_t j = i + 1; j < pts_.size(); ++j) {
        if (!arcs_.count(key(i, j)) && admissible(i, j)) arcs_.insert(key(i, j));
      }
    }
  }

  std::vector<std::array<std::size_t, 3>> triangles() const {
    std::vector<std::array<std::size_t, 3>> out;
    const std::size_t n = pts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!arcs_.count(key(i, j))) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (!arcs_.count(key(i, k)) || !arcs_.count(key(j, k))) continue;
          if (empty_triangle(i, j, k)) out.push_back({i, j, k});
        }
      }
    }
    return out;
  }

  const std::vector<IntVec>& points() const { return pts_; }

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
    return {std::min(i, j), std::max(i, j)};
  }

  bool in_hole(const IntVec& v) const {
    RatVec x = to_rat(v);
    return std::any_of(holes_.begin(), holes_.end(),
                       [&](const Polyhedron& h) { return contains(h, x, Membership::RelativeInterior); });
  }

  bool admissible(std::size_t i, std::size_t j) const {
    const IntVec& a = pts_[i];
    const IntVec& b = pts_[j];
    if (is_zero(to_rat(cross3(a, b)))) return false;
    for (std::size_t k = 0; k < pts_.size(); ++k) {
      if (k != i && k != j && strictly_between(a, b, pts_[k])) return false;
    }
    for (const auto& [k, l] : arcs_) {
      if (k == i || k == j || l == i || l == j) continue;
      if (arcs_cross(a, b, pts_[k], pts_[l])) return false;
    }
    return !in_hole(add(a, b));
  }

  bool empty_triangle(std::size_t i, std::size_t j, std::size_t k) const {
    const IntVec& a = pts_[i];
    const IntVec& b = pts_[j];
    const IntVec& c = pts_[k];
    const Int d = det3(a, b, c);
    if (d == 0) return false;
    const int s = sign(d);
    for (std::size_t m = 0; m < pts_.size(); ++m) {
      if (m == i || m == j || m == k) continue;
      const IntVec& p = pts_[m];
      if (sign(det3(p, b, c)) == s && sign(det3(a, p, c)) == s && sign(det3(a, b, p)) == s) return false;
    }
    return !in_hole(add(add(a, b), c));
  }

  std::vector<IntVec> pts_;
  std::vector<Polyhedron> holes_;
  std::set<std::pair<std::size_t, std::size_t>> arcs_;
};

Completion complete_2d(const Complex& phi, const Complex& sigma, const GammaSpec& gamma) {
  std::vector<IntVec> pts;
  auto index_of = [&](const IntVec& v) {
    auto it = std::find(pts.begin(), pts.end(), v);
    if (it != pts.end()) return static_cast<std::size_t>(it - pts.begin());
    pts.push_back(v);
    return pts.size() - 1;
  };
  auto homog_point = [](const RatVec& v) {
    RatVec h = v;
    h.push_back(1);
    return primitive(h);
  };
  auto homog_ray = [](const IntVec& r) { return IntVec{r[0], r[1], Int(0)}; };

  bool has_vertex = false;
  for (const auto& c : phi.cells) {
    if (c.dim() == 0) {
      index_of(homog_point(c.points().front()));
      has_vertex = true;
    }
  }
  for (const auto& r : sorted_rays(sigma)) index_of(homog_ray(r));
  if (!has_vertex) index_of(IntVec{0, 0, 1});

  std::vector<Polyhedron> holes;
  for (const auto& c : phi.cells) {
    if (c.dim() == 2) holes.push_back(cone_over(c, gamma));
  }
  SphereTriangulation tri(pts, holes);
  auto generators = [&](const Polyhedron& c) {
    std::vector<std::size_t> g;
    for (const auto& p : c.points()) g.push_back(index_of(homog_point(p)));
    for (const auto& r : c.rays()) g.push_back(index_of(homog_ray(r)));
    return g;
  };
  for (const auto& c : phi.cells) {
    if (c.dim() != 1) continue;
    auto g = generators(c);
    tri.force(g[0], g[1]);
  }
  for (const auto& c : sigma.cells) {
    if (c.dim() != 2) continue;
    auto g = generators(c);
    tri.force(g[1], g[2]);  // g[0] is the apex
  }
  tri.saturate();

  std::vector<Polyhedron> cells = phi.cells;
  for (const auto& t : tri.triangles()) {
    std::vector<RatVec> points;
    std::vector<RatVec> rays;
    for (std::size_t idx : t) {
      const IntVec& p = tri.points()[idx];
      if (p[2] == 0) {
        rays.push_back(RatVec{Rat(p[0]), Rat(p[1])});
      } else {
        points.push_back(RatVec{Rat(p[0], p[2]), Rat(p[1], p[2])});
      }
    }
    cells.push_back(Polyhedron::from_generators(2, points, rays));
  }
  Completion out;
  out.complex.dim = 2;
  out.complex.finite_part = face_closure(2, cells);
  out.kind = CompletionKind::Finite;
  return out;
}

Completion complete_weak(const Complex& phi, const Complex& sigma) {
  const std::size_t d = phi.dim;
  std::vector<HalfSpace> hyperplanes = coordinate_hyperplanes(d);
  for (const auto* c : {&phi, &sigma}) {
    for (const auto& p : c->cells) {
      for (const auto& h : p.ineqs()) hyperplanes.push_back(h);
      for (const auto& h : p.eqs()) hyperplanes.push_back(h);
    }
  }
  Completion out;
  out.complex.dim = d;
  out.complex.finite_part = arrangement_complex(d, hyperplanes);
  out.kind = CompletionKind::WeakOnly;
  return out;
}

}  // namespace

Completion complete_complex(const Complex& phi, const Complex& sigma, const GammaSpec& gamma) {
  if (phi.dim != sigma.dim) throw Error(ErrorKind::Input, "complex and fan live in different dimensions");
  const auto keys = fan_keys(sigma);
  for (const auto& c : phi.cells) {
    if (!keys.count(recession_cone(c).key())) {
      throw Error(ErrorKind::RecessionNotInSigma, "recession cone of " + to_string(c) + " is not a cone of Sigma");
    }
  }
  if (phi.dim == 1) return complete_1d(phi, sigma, gamma);
  if (phi.dim == 2 && is_complete_fan_2d(sigma)) return complete_2d(phi, sigma, gamma);
  return complete_weak(phi, sigma);
}


namespace {

struct Interval {
  std::optional<Rat> lo, hi;  // nullopt is -inf / +inf
};

bool lo_less(const Interval& a, const Interval& b) {
  if (!a.lo) return b.lo.has_value();
  return b.lo && *a.lo < *b.lo;
}

Interval interval_of(const Polyhedron& p) {
  Interval out;
  if (!p.lineality().empty()) return out;
  out.lo = out.hi = p.points().front()[0];
  for (const auto& v : p.points()) {
    out.lo = std::min(*out.lo, v[0]);
    out.hi = std::max(*out.hi, v[0]);
  }
  for (const auto& r : p.rays()) (r[0] > 0 ? out.hi : out.lo) = std::nullopt;
  return out;
}

// The support of a 1-d family as one interval, when its members chain end to end.
std::optional<Interval> family_interval(const FamilyCell& f) {
  auto paths = vertex_paths(f, 4);
  if (!paths || paths->size() != 2) return std::nullopt;
  const RatFun* lo = &(*paths)[0].coords[0];
  const RatFun* hi = &(*paths)[1].coords[0];
  if (lo->eval(f.n_min) > hi->eval(f.n_min)) std::swap(lo, hi);
  Interval out;
  if (hi->equals(lo->shifted(1)) && rf_limit(*lo).kind == RfLimit::Kind::PlusInfinity) {
    out.lo = lo->eval(f.n_min);
    return out;
  }
  if (lo->equals(hi->shifted(1)) && rf_limit(*hi).kind == RfLimit::Kind::MinusInfinity) {
    out.hi = hi->eval(f.n_min);
    return out;
  }
  return std::nullopt;
}

Verdict coverage_1d(const FamilyComplex& phi_bar) {
  std::vector<Interval> parts;
  for (const auto& c : phi_bar.finite_part.maximal_cells()) parts.push_back(interval_of(c));
  for (const auto& f : phi_bar.families) {
    auto iv = family_interval(f);
    if (!iv) return Verdict::unknown("family does not chain end to end", Json{{"family", f.label}});
    parts.push_back(*iv);
  }
  if (parts.empty()) return Verdict::refuted("coverage gap", Json{{"witness", json_of(RatVec{Rat(0)})}});
  std::sort(parts.begin(), parts.end(), lo_less);
  if (parts.front().lo) {
    return Verdict::refuted("coverage gap", Json{{"witness", json_of(RatVec{*parts.front().lo - 1})}});
  }
  std::optional<Rat> cur = parts.front().hi;
  for (std::size_t i = 1; i < parts.size() && cur; ++i) {
    if (*parts[i].lo > *cur) {
      return Verdict::refuted("coverage gap", Json{{"witness", json_of(RatVec{(*cur + *parts[i].lo) / 2})}});
    }
    if (!parts[i].hi) {
      cur = std::nullopt;
    } else {
      cur = std::max(*cur, *parts[i].hi);
    }
  }
  if (cur) return Verdict::refuted("coverage gap", Json{{"witness", json_of(RatVec{*cur + 1})}});
  return Verdict::proved(Json{{"intervals", parts.size()}});
}

std::optional<RatVec> uncovered_near_facet(const Complex& phi, const Polyhedron& facet, const HalfSpace& row) {
  RatVec x = relint_point(facet);
  Rat delta(1);
  for (int i = 0; i < 24; ++i, delta /= 2) {
    RatVec y = x - delta * row.u;
    if (!support_contains(phi, y)) return y;
  }
  return std::nullopt;
}

// A finite complex covers R^d iff it has a full-dimensional cell and every
// facet of a full-dimensional cell is shared by exactly two of them.
Verdict coverage_finite(const Complex& phi) {
  const std::size_t d = phi.dim;
  std::vector<Polyhedron> full;
  for (const auto& c : phi.cells) {
    if (c.is_full_dimensional()) full.push_back(c);
  }
  if (full.empty()) {
    for (long k = 0; k < 64; ++k) {
      RatVec y(d);
      for (std::size_t i = 0; i < d; ++i) y[i] = Rat(k + 1, static_cast<long>(2 * i + 3)) + Rat(k * k, 7);
      if (!support_contains(phi, y)) return Verdict::refuted("coverage gap", Json{{"witness", json_of(y)}});
    }
    return Verdict::unknown("no full-dimensional cell and no uncovered sample");
  }
  std::map<std::string, int> shared;
  for (const auto& c : full) {
    for (const auto& f : facets(c)) ++shared[f.key()];
  }
  for (const auto& c : full) {
    for (const auto& row : c.ineqs()) {
      Polyhedron f = Polyhedron::from_rows(d, c.ineqs(), {row});
      if (f.dim() + 1 != static_cast<int>(d) || shared[f.key()] == 2) continue;
      auto y = uncovered_near_facet(phi, f, row);
      if (!y) return Verdict::unknown("facet with one neighbour but no uncovered point found", Json{{"facet", json_of(f)}});
      return Verdict::refuted("coverage gap", Json{{"witness", json_of(*y)}, {"facet", json_of(f)}});
    }
  }
  return Verdict::proved(Json{{"full_cells", full.size()}, {"facets", shared.size()}});
}

std::optional<std::string> nongamma_coordinate(const RatVec& v, const GammaSpec& gamma, Int* e) {
  for (const auto& x : v) {
    if (!gamma.contains(x)) {
      *e = gamma.multiplier(x);
      return to_string(x);
    }
  }
  return std::nullopt;
}

}  // namespace

// Vertices of every cell in N_Gamma; trivially true for discrete Gamma.
Verdict vertices_in_gamma(const FamilyComplex& phi, const GammaSpec& gamma) {
  if (gamma.is_discrete()) return Verdict::proved(Json{{"reason", "discrete value group"}});
  Int e = 1;
  std::size_t checked = 0;
  for (const auto& c : phi.finite_part.cells) {
    if (!c.is_pointed()) continue;
    for (const auto& v : c.points()) {
      ++checked;
      if (nongamma_coordinate(v, gamma, &e)) {
        return Verdict::refuted("vertex not in N_Gamma", Json{{"vertex", json_of(v)}, {"suggested_e", to_string(e)}});
      }
    }
  }
  for (const auto& f : phi.families) {
    auto paths = vertex_paths(f, 4);
    if (!paths) return Verdict::unknown("no stable vertex paths", Json{{"family", f.label}});
    for (const auto& path : *paths) {
      for (const auto& x : path.coords) {
        if (x.den().degree() != 0 || x.num().degree() > 1) {
          return Verdict::unknown("vertex path is not affine in n", Json{{"family", f.label}});
        }
      }
      // An affine path stays in the group iff its start and its slope do.
      RatVec start = eval(path.coords, f.n_min);
      RatVec slope = eval(path.coords, f.n_min + 1) - start;
      for (const RatVec& v : {start, slope}) {
        if (nongamma_coordinate(v, gamma, &e)) {
          return Verdict::refuted("family vertex path leaves N_Gamma",
                                  Json{{"family", f.label}, {"vertex", json_of(start)}, {"suggested_e", to_string(e)}});
        }
      }
      ++checked;
    }
  }
  return Verdict::proved(Json{{"vertices_checked", checked}});
}

Verdict validate_completion(const FamilyComplex& phi_bar, const Complex& phi, const Complex& sigma,
                            const GammaSpec& gamma, long window) {
  std::vector<std::pair<std::string, Verdict>> parts;

  parts.emplace_back("complex", phi_bar.is_finite()
                                    ? validate_complex(phi_bar.dim, phi_bar.finite_part.cells)
                                    : family_validate(phi_bar, window));

  Verdict sub = Verdict::proved(Json{{"cells", phi.cells.size()}});
  for (const auto& c : phi.cells) {
    if (!phi_bar.finite_part.has(c)) {
      sub = Verdict::refuted("input cell missing from the completion", Json{{"cell", json_of(c)}});
      break;
    }
  }
  parts.emplace_back("subcomplex", sub);

  if (phi_bar.dim == 1) {
    parts.emplace_back("coverage", coverage_1d(phi_bar));
  } else if (phi_bar.is_finite()) {
    parts.emplace_back("coverage", coverage_finite(phi_bar.finite_part));
  } else {
    parts.emplace_back("coverage", Verdict::unknown("coverage with families is only decided in dimension 1"));
  }

  const auto allowed = fan_keys(sigma);
  Verdict rec = Verdict::proved();
  for (const auto& c : phi_bar.finite_part.cells) {
    if (!allowed.count(recession_cone(c).key())) {
      rec = Verdict::refuted("recession cone not in Sigma", Json{{"cell", json_of(c)}});
      break;
    }
  }
  for (const auto& f : phi_bar.families) {
    if (rec.is_proved() && !allowed.count(family_recession(f).key())) {
      rec = Verdict::refuted("recession cone not in Sigma", Json{{"family", f.label}});
    }
  }
  parts.emplace_back("recession_in_sigma", rec);

  parts.emplace_back("vertices_in_gamma", vertices_in_gamma(phi_bar, gamma));

  if (rec.is_proved()) {
    parts.emplace_back("locally_finite", locally_finite_in_compactification(phi_bar, sigma, window));
  } else {
    parts.emplace_back("locally_finite", Verdict::unknown("skipped: recession cones outside Sigma"));
  }
  return combine(parts);
}

Verdict ModelReport::overall() const {
  std::vector<std::pair<std::string, Verdict>> parts(verdicts.begin(), verdicts.end());
  parts.emplace_back("subfan", subfan ? Verdict::proved() : Verdict::refuted("input cone missing from the model fan"));
  parts.emplace_back("ht0_preserved", ht0_preserved ? Verdict::proved() : Verdict::refuted("ht_0 changed"));
  return combine(parts);
}

ModelReport complete_model(const HalfSpaceFan& delta, const GammaSpec& gamma, long window) {
  const std::size_t d = delta.dim;
  ModelReport r;
  Verdict slices = height_slices(d, delta.cones.cells, &r.sigma, &r.phi);
  std::vector<std::pair<std::string, Verdict>> adm{{"height_slices", slices}};
  for (const auto& c : delta.cones.maximal_cells()) adm.emplace_back("cone", is_gamma_admissible_cone(c, gamma));
  Verdict input_adm = combine(adm);
  r.input = Json{{"d", d},
                 {"gamma", gamma.to_string()},
                 {"cones", delta.cones.cells.size()},
                 {"sigma_cells", r.sigma.cells.size()},
                 {"phi_cells", r.phi.cells.size()}};
  if (!input_adm.is_proved()) {
    r.gamma_effective = gamma;
    r.verdicts["admissible"] = input_adm;
    for (const char* k : {"finite_type_or_locally_finite_type", "completion_valid", "condition_star", "domain_isomorphism"}) {
      r.verdicts[k] = Verdict::unknown("input is not admissible");
    }
    return r;
  }

  // Ramify until every vertex, old and new, lies in N_{Gamma_eff}.
  r.e = 1;
  if (!gamma.is_discrete() && !gamma.is_divisible()) r.e = minimal_ramification(r.phi, gamma);
  Completion done;
  for (int round = 0; round < 4; ++round) {
    r.gamma_effective = gamma.scaled_down(r.e);
    done = complete_complex(r.phi, r.sigma, r.gamma_effective);
    if (gamma.is_discrete() || gamma.is_divisible()) break;
    Int more = minimal_ramification(done.complex.finite_part, r.gamma_effective);
    if (more == 1) break;
    r.e *= more;
  }
  r.phi_bar = std::move(done.complex);
  r.kind = done.kind;

  Verdict assembled = assemble_delta(r.sigma, r.phi_bar.finite_part, r.gamma_effective, &r.delta_bar);
  r.verdicts["admissible"] = combine({{"input", input_adm}, {"completed", assembled}});

  std::vector<Polyhedron> finite_cones = r.delta_bar.cones.maximal_cells();
  r.verdicts["finite_type_or_locally_finite_type"] =
      combine({{"finite_type", is_finite_type(finite_cones, r.gamma_effective)},
               {"vertices_in_gamma", vertices_in_gamma(r.phi_bar, r.gamma_effective)}});
  r.verdicts["completion_valid"] = validate_completion(r.phi_bar, r.phi, r.sigma, r.gamma_effective, window);
  r.verdicts["condition_star"] = condition_star(r.phi_bar, r.sigma, window);
  r.verdicts["domain_isomorphism"] = domain_isomorphism_verdict(r.phi_bar, r.sigma, window);

  r.subfan = std::all_of(delta.cones.cells.begin(), delta.cones.cells.end(),
                         [&](const Polyhedron& c) { return r.delta_bar.cones.has(c); });
  r.ht0_preserved = fan_keys(r.delta_bar.sigma) == fan_keys(r.sigma);
  std::set<std::string> recs{Polyhedron::point(RatVec(d, Rat(0))).key()};
  for (const auto& c : r.phi_bar.finite_part.cells) recs.insert(recession_cone(c).key());
  for (const auto& f : r.phi_bar.families) recs.insert(family_recession(f).key());
  r.rec_equals_sigma = recs == fan_keys(r.sigma);
  return r;
}

ModelReport algebraize(const Complex& sigma, const GammaSpec& gamma, long window) {
  const std::size_t d = sigma.dim;
  FanCompletion sigma_prime = complete_fan(sigma);
  std::vector<Polyhedron> cones;
  for (const auto& s : sigma.cells) {
    cones.push_back(cone_over(s, gamma));
    cones.push_back(cone_at_zero(s));
  }
  Polyhedron zero = Polyhedron::point(RatVec(d, Rat(0)));
  cones.push_back(cone_over(zero, gamma));
  HalfSpaceFan delta;
  delta.dim = d;
  validate_fan(d + 1, cones, &delta.cones);
  ModelReport r = complete_model(delta, gamma, window);
  r.sigma_prime = std::move(sigma_prime);
  return r;
}

}  // namespace toricval
