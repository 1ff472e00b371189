#include "toricval/polyhedron.hpp"

#include "toricval/double_description.hpp"
#include "toricval/lattice.hpp"
#include "toricval/lp.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toricval {

namespace {

Rat idot(const RatVec& u, const IntVec& r) {
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0 && r[i] != 0) s += u[i] * Rat(r[i]);
  }
  return s;
}

RatVec homog(const RatVec& p) {
  RatVec out = p;
  out.push_back(1);
  return out;
}

RatVec homog(const IntVec& r) {
  RatVec out = to_rat(r);
  out.push_back(0);
  return out;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.u != b.u) return a.u < b.u;
  return a.gamma < b.gamma;
}

}  // namespace

std::string to_string(const HalfSpace& h) { return to_string(h.u) + ">=" + to_string(h.gamma); }

Polyhedron Polyhedron::empty(std::size_t dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = true;
  p.make_key();
  return p;
}

Polyhedron Polyhedron::from_trusted(std::size_t dim, std::vector<HalfSpace> candidate_ineqs,
                                    std::vector<RatVec> points, std::vector<IntVec> rays,
                                    std::vector<IntVec> lineality) {
  Polyhedron p;
  p.dim_ = dim;
  p.build(std::move(candidate_ineqs), std::move(points), std::move(rays), std::move(lineality));
  return p;
}

Polyhedron Polyhedron::whole(std::size_t dim) { return from_rows(dim, {}); }

Polyhedron Polyhedron::point(const RatVec& p) { return from_generators(p.size(), {p}); }

Polyhedron Polyhedron::from_rows(std::size_t dim, const std::vector<HalfSpace>& ineqs,
                                 const std::vector<HalfSpace>& eqs) {
  std::vector<RatVec> hrows, heqs;
  hrows.reserve(ineqs.size() + 1);
  for (const auto& h : ineqs) {
    if (h.u.size() != dim) throw Error(ErrorKind::Input, "half-space length does not match dimension");
    RatVec a = h.u;
    a.push_back(-h.gamma);
    hrows.push_back(std::move(a));
  }
  for (const auto& h : eqs) {
    if (h.u.size() != dim) throw Error(ErrorKind::Input, "equation length does not match dimension");
    RatVec a = h.u;
    a.push_back(-h.gamma);
    heqs.push_back(std::move(a));
  }
  RatVec t(dim + 1, Rat(0));
  t[dim] = 1;
  hrows.push_back(t);

  ConeGenerators g = cone_generators(hrows, heqs, dim + 1);
  std::vector<RatVec> points;
  std::vector<IntVec> rays, lin;
  for (const auto& r : g.rays) {
    if (r[dim] > 0) {
      RatVec p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = Rat(r[i], r[dim]);
      points.push_back(std::move(p));
    } else {
      rays.emplace_back(r.begin(), r.end() - 1);
    }
  }
  for (const auto& l : g.lineality) lin.emplace_back(l.begin(), l.end() - 1);

  Polyhedron p;
  p.dim_ = dim;
  if (points.empty()) return empty(dim);
  std::vector<HalfSpace> candidates = ineqs;
  for (const auto& h : eqs) {
    candidates.push_back(h);
    candidates.push_back({Rat(-1) * h.u, -h.gamma});
  }
  p.build(std::move(candidates), std::move(points), std::move(rays), std::move(lin));
  return p;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<RatVec>& points,
                                       const std::vector<RatVec>& rays, const std::vector<RatVec>& lineality) {
  if (points.empty()) return empty(dim);
  std::vector<RatVec> gens;
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::Input, "point length does not match dimension");
    gens.push_back(homog(p));
  }
  for (const auto& r : rays) {
    if (r.size() != dim) throw Error(ErrorKind::Input, "ray length does not match dimension");
    RatVec a = r;
    a.push_back(0);
    gens.push_back(std::move(a));
  }
  for (const auto& l : lineality) {
    if (l.size() != dim) throw Error(ErrorKind::Input, "lineality length does not match dimension");
    RatVec a = l;
    a.push_back(0);
    gens.push_back(a);
    gens.push_back(Rat(-1) * a);
  }
  // Rows (u, s) with (u, s) . g >= 0 describe the cone over P.
  ConeGenerators dual = cone_generators(gens, {}, dim + 1);
  std::vector<HalfSpace> ineqs, eqs;
  for (const auto& a : dual.rays) {
    RatVec u = to_rat(IntVec(a.begin(), a.end() - 1));
    if (is_zero(u)) continue;
    ineqs.push_back({std::move(u), Rat(-a[dim])});
  }
  for (const auto& a : dual.lineality) {
    RatVec u = to_rat(IntVec(a.begin(), a.end() - 1));
    eqs.push_back({std::move(u), Rat(-a[dim])});
  }
  return from_rows(dim, ineqs, eqs);
}

void Polyhedron::build(std::vector<HalfSpace> candidates, std::vector<RatVec> points, std::vector<IntVec> rays,
                       std::vector<IntVec> lineality) {
  empty_ = points.empty();
  ineqs_.clear();
  eqs_.clear();
  if (empty_) {
    points_.clear();
    rays_.clear();
    lineality_.clear();
    make_key();
    return;
  }
  const std::size_t d = dim_;

  // Affine hull: (u, g) with <u,p> = g on points and <u,r> = 0 on rays and lines.
  std::vector<RatVec> gen_rows;
  for (const auto& p : points) {
    RatVec r = p;
    r.push_back(-1);
    gen_rows.push_back(std::move(r));
  }
  for (const auto& r : rays) gen_rows.push_back(homog(r));
  for (const auto& l : lineality) gen_rows.push_back(homog(l));
  std::vector<RatVec> hull;
  for (const auto& v : nullspace(gen_rows, d + 1)) hull.push_back(to_rat(v));
  std::vector<std::size_t> pivots;
  std::vector<RatVec> eq_rref = rref(hull, d + 1, &pivots);
  for (const auto& e : eq_rref) {
    RatVec u(e.begin(), e.end() - 1);
    Rat c = primitive_scale(u);
    eqs_.push_back({c * u, c * e[d]});
  }
  const std::size_t dimension = d - eqs_.size();

  std::vector<RatVec> hom_gens;
  for (const auto& p : points) hom_gens.push_back(homog(p));
  std::vector<HalfSpace> facets;
  for (auto& h : candidates) {
    std::vector<RatVec> tight;
    bool all_tight = true;
    bool touches = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (dot(h.u, points[i]) == h.gamma) {
        tight.push_back(hom_gens[i]);
        touches = true;
      } else {
        all_tight = false;
      }
    }
    for (const auto& r : rays) {
      if (idot(h.u, r) == 0) tight.push_back(homog(r));
      else all_tight = false;
    }
    // A facet contains a point of some minimal face; rows tight only at infinity are not facets.
    if (all_tight || !touches) continue;
    for (const auto& l : lineality) tight.push_back(homog(l));
    if (rank(tight, d + 1) != dimension) continue;
    RatVec u = h.u;
    Rat g = h.gamma;
    for (std::size_t k = 0; k < eq_rref.size(); ++k) {
      const Rat f = u[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) u[j] -= f * eq_rref[k][j];
      g -= f * eq_rref[k][d];
    }
    Rat c = primitive_scale(u);
    facets.push_back({c * u, c * g});
  }
  std::sort(facets.begin(), facets.end(), halfspace_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  ineqs_ = std::move(facets);

  sort_unique(points);
  sort_unique(rays);
  points_ = std::move(points);
  rays_ = std::move(rays);
  lineality_.clear();
  if (!lineality.empty()) {
    std::vector<RatVec> lr;
    for (const auto& l : lineality) lr.push_back(to_rat(l));
    for (const auto& l : rref(lr, d)) lineality_.push_back(primitive(l));
  }
  make_key();
}

void Polyhedron::make_key() {
  if (empty_) {
    key_ = "empty/" + std::to_string(dim_);
    return;
  }
  key_ = std::to_string(dim_) + "|";
  for (const auto& e : eqs_) key_ += to_string(e.u) + "=" + to_string(e.gamma) + ";";
  key_ += "|";
  for (const auto& h : ineqs_) key_ += to_string(h) + ";";
}

bool Polyhedron::is_cone() const {
  if (empty_) return false;
  for (const auto& h : ineqs_) {
    if (h.gamma != 0) return false;
  }
  for (const auto& h : eqs_) {
    if (h.gamma != 0) return false;
  }
  return true;
}

const std::vector<RatVec>& Polyhedron::vertices() const {
  if (empty_) throw Error(ErrorKind::Empty, "vertices of the empty polyhedron");
  if (!lineality_.empty()) throw Error(ErrorKind::NotPointed, "polyhedron contains a line: " + to_string(*this));
  return points_;
}

std::vector<HalfSpace> Polyhedron::all_rows_as_ineqs() const {
  std::vector<HalfSpace> out = ineqs_;
  for (const auto& e : eqs_) {
    out.push_back(e);
    out.push_back({Rat(-1) * e.u, -e.gamma});
  }
  return out;
}

Polyhedron Polyhedron::face_where_tight(const std::vector<std::size_t>& rows) const {
  if (empty_) return *this;
  std::vector<RatVec> pts;
  std::vector<IntVec> rs;
  for (const auto& p : points_) {
    bool ok = std::all_of(rows.begin(), rows.end(), [&](std::size_t i) { return dot(ineqs_[i].u, p) == ineqs_[i].gamma; });
    if (ok) pts.push_back(p);
  }
  for (const auto& r : rays_) {
    bool ok = std::all_of(rows.begin(), rows.end(), [&](std::size_t i) { return idot(ineqs_[i].u, r) == 0; });
    if (ok) rs.push_back(r);
  }
  Polyhedron f;
  f.dim_ = dim_;
  std::vector<HalfSpace> candidates = ineqs_;
  for (const auto& e : eqs_) candidates.push_back(e);
  f.build(std::move(candidates), std::move(pts), std::move(rs), lineality_);
  return f;
}

std::string to_string(const Polyhedron& p) {
  if (p.is_empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& e : p.eqs()) {
    out += (first ? "" : ", ") + to_string(e.u) + "=" + to_string(e.gamma);
    first = false;
  }
  for (const auto& h : p.ineqs()) {
    out += (first ? "" : ", ") + to_string(h);
    first = false;
  }
  return out + "}";
}

bool contains(const Polyhedron& p, const RatVec& x, Membership mode) {
  if (p.is_empty()) return false;
  if (x.size() != p.ambient_dim()) throw Error(ErrorKind::Input, "point dimension does not match polyhedron");
  for (const auto& e : p.eqs()) {
    if (dot(e.u, x) != e.gamma) return false;
  }
  for (const auto& h : p.ineqs()) {
    Rat v = dot(h.u, x);
    if (v < h.gamma) return false;
    if (mode == Membership::RelativeInterior && v == h.gamma) return false;
  }
  return true;
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::Input, "intersect: dimension mismatch");
  if (a.is_empty()) return a;
  if (b.is_empty()) return b;
  std::vector<HalfSpace> ineqs = a.ineqs();
  ineqs.insert(ineqs.end(), b.ineqs().begin(), b.ineqs().end());
  std::vector<HalfSpace> eqs = a.eqs();
  eqs.insert(eqs.end(), b.eqs().begin(), b.eqs().end());
  return Polyhedron::from_rows(a.ambient_dim(), ineqs, eqs);
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorKind::Empty, "recession cone of the empty polyhedron");
  std::vector<HalfSpace> rows;
  for (const auto& h : p.ineqs()) rows.push_back({h.u, Rat(0)});
  return Polyhedron::from_trusted(p.ambient_dim(), std::move(rows), {RatVec(p.ambient_dim(), Rat(0))}, p.rays(),
                                  p.lineality());
}

std::vector<Polyhedron> faces(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorKind::Empty, "faces of the empty polyhedron");
  std::vector<Polyhedron> out{p};
  std::set<std::string> seen{p.key()};
  std::deque<Polyhedron> queue{p};
  while (!queue.empty()) {
    Polyhedron f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < f.ineqs().size(); ++i) {
      Polyhedron g = f.face_where_tight({i});
      if (g.is_empty() || !seen.insert(g.key()).second) continue;
      out.push_back(g);
      queue.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  return out;
}

std::vector<Polyhedron> facets(const Polyhedron& p) {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < p.ineqs().size(); ++i) out.push_back(p.face_where_tight({i}));
  return out;
}

bool is_face_of(const Polyhedron& f, const Polyhedron& p) {
  if (f.is_empty() || p.is_empty()) return false;
  if (f.ambient_dim() != p.ambient_dim()) return false;
  for (const auto& x : f.points()) {
    if (!contains(p, x)) return false;
  }
  auto in_rec = [&](const IntVec& r, bool line) {
    for (const auto& e : p.eqs()) {
      if (idot(e.u, r) != 0) return false;
    }
    for (const auto& h : p.ineqs()) {
      Rat v = idot(h.u, r);
      if (v < 0 || (line && v != 0)) return false;
    }
    return true;
  };
  for (const auto& r : f.rays()) {
    if (!in_rec(r, false)) return false;
  }
  for (const auto& l : f.lineality()) {
    if (!in_rec(l, true)) return false;
  }
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.ineqs().size(); ++i) {
    const auto& h = p.ineqs()[i];
    bool ok = std::all_of(f.points().begin(), f.points().end(), [&](const RatVec& x) { return dot(h.u, x) == h.gamma; }) &&
              std::all_of(f.rays().begin(), f.rays().end(), [&](const IntVec& r) { return idot(h.u, r) == 0; });
    if (ok) tight.push_back(i);
  }
  return p.face_where_tight(tight).key() == f.key();
}

RatVec relint_point(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorKind::Empty, "relative interior of the empty polyhedron");
  RatVec x(p.ambient_dim(), Rat(0));
  for (const auto& v : p.points()) x = x + v;
  x = Rat(1, static_cast<long>(p.points().size())) * x;
  for (const auto& r : p.rays()) x = x + to_rat(r);
  return x;
}

Polyhedron project(const Polyhedron& p, const IntMatrix& m) {
  const std::size_t k = m.size();
  if (p.is_empty()) return Polyhedron::empty(k);
  std::vector<RatVec> pts, rays, lin;
  for (const auto& v : p.points()) pts.push_back(mat_vec(m, v));
  for (const auto& r : p.rays()) rays.push_back(mat_vec(m, to_rat(r)));
  for (const auto& l : p.lineality()) lin.push_back(mat_vec(m, to_rat(l)));
  return Polyhedron::from_generators(k, pts, rays, lin);
}

bool subset_of_lp(const Polyhedron& a, const Polyhedron& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  const std::size_t d = a.ambient_dim();
  std::vector<HalfSpace> rows = a.ineqs();
  auto ok = [&](const RatVec& u, const Rat& g) {
    auto lo = minimize(d, u, rows, a.eqs());
    return lo && *lo >= g;
  };
  for (const auto& h : b.ineqs()) {
    if (!ok(h.u, h.gamma)) return false;
  }
  for (const auto& e : b.eqs()) {
    if (!ok(e.u, e.gamma) || !ok(Rat(-1) * e.u, -e.gamma)) return false;
  }
  return true;
}

bool same_set_lp(const Polyhedron& a, const Polyhedron& b) { return subset_of_lp(a, b) && subset_of_lp(b, a); }

std::vector<RatVec> vertices_by_active_sets(std::size_t dim, const std::vector<HalfSpace>& rows) {
  std::vector<RatVec> out;
  const std::size_t m = rows.size();
  if (dim == 0) {
    bool feasible = std::all_of(rows.begin(), rows.end(), [](const HalfSpace& h) { return h.gamma <= 0; });
    if (feasible) out.push_back({});
    return out;
  }
  if (m < dim) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.end() - static_cast<long>(dim), pick.end(), true);
  do {
    std::vector<RatVec> aug;
    for (std::size_t i = 0; i < m; ++i) {
      if (!pick[i]) continue;
      RatVec r = rows[i].u;
      r.push_back(rows[i].gamma);
      aug.push_back(std::move(r));
    }
    std::vector<std::size_t> piv;
    auto red = rref(aug, dim + 1, &piv);
    if (red.size() != dim || piv.back() == dim) continue;
    RatVec x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[piv[i]] = red[i][dim];
    bool feasible = std::all_of(rows.begin(), rows.end(), [&](const HalfSpace& h) { return dot(h.u, x) >= h.gamma; });
    if (feasible) out.push_back(std::move(x));
  } while (std::next_permutation(pick.begin(), pick.end()));
  sort_unique(out);
  return out;
}

bool is_redundant_row(const Polyhedron& p, std::size_t row) {
  std::vector<HalfSpace> others;
  for (std::size_t i = 0; i < p.ineqs().size(); ++i) {
    if (i != row) others.push_back(p.ineqs()[i]);
  }
  auto lo = minimize(p.ambient_dim(), p.ineqs()[row].u, others, p.eqs());
  return lo && *lo >= p.ineqs()[row].gamma;
}

std::vector<HalfSpace> gamma_rational_rows(const Polyhedron& p, const GammaSpec& gamma) {
  std::vector<HalfSpace> out;
  auto scale = [&](const HalfSpace& h) {
    Rat k(gamma.multiplier(h.gamma));
    return HalfSpace{k * h.u, k * h.gamma};
  };
  for (const auto& e : p.eqs()) out.push_back(scale(e));
  for (const auto& h : p.ineqs()) out.push_back(scale(h));
  return out;
}

bool is_gamma_rational(const Polyhedron& p, const GammaSpec& gamma) {
  for (const auto& h : gamma_rational_rows(p, gamma)) {
    if (!gamma.contains(h.gamma)) return false;
    for (const auto& x : h.u) {
      if (!is_integer(x)) return false;
    }
  }
  return true;
}

}  // namespace toricval
