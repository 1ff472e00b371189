#include "toricval/admissible.hpp"

#include "toricval/lattice.hpp"
#include "toricval/lp.hpp"

#include <algorithm>
#include <set>

namespace toricval {

namespace {

bool in_upper_half_space(const Polyhedron& sigma, std::size_t t) {
  for (const auto& r : sigma.rays()) {
    if (r[t] < 0) return false;
  }
  for (const auto& l : sigma.lineality()) {
    if (l[t] != 0) return false;
  }
  return std::all_of(sigma.points().begin(), sigma.points().end(), [&](const RatVec& p) { return p[t] >= 0; });
}

IntVec homogenize_point(const RatVec& v) {
  RatVec h = v;
  h.push_back(1);
  return primitive(h);
}

IntVec append(const IntVec& v, const Int& x) {
  IntVec out = v;
  out.push_back(x);
  return out;
}

IntVec drop_last(const IntVec& v) { return IntVec(v.begin(), v.end() - 1); }

bool cone_contains(const Polyhedron& c, const IntVec& x) { return contains(c, to_rat(x)); }

// Simplicial subdivision of a pointed full-dimensional cone, as ray index tuples.
void triangulate(const Polyhedron& cone, std::vector<std::vector<IntVec>>* out) {
  const auto& rays = cone.rays();
  const std::size_t k = static_cast<std::size_t>(cone.dim());
  if (rays.size() <= k) {
    out->push_back(rays);
    return;
  }
  const IntVec& r0 = rays.front();
  for (std::size_t i = 0; i < cone.ineqs().size(); ++i) {
    if (dot(cone.ineqs()[i].u, to_rat(r0)) == 0) continue;
    std::vector<std::vector<IntVec>> sub;
    triangulate(cone.face_where_tight({i}), &sub);
    for (auto& s : sub) {
      s.push_back(r0);
      out->push_back(std::move(s));
    }
  }
}

// Lattice points of the half-open parallelepiped spanned by a basis of R^m.
void parallelepiped_points(const std::vector<IntVec>& basis, std::set<IntVec>* out) {
  const std::size_t m = basis.size();
  std::vector<RatVec> mat(m, RatVec(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) mat[j][i] = Rat(basis[i][j]);
  }
  // Invert by row reduction of [mat | I].
  std::vector<RatVec> aug(m, RatVec(2 * m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = mat[i][j];
    aug[i][m + i] = 1;
  }
  std::vector<std::size_t> piv;
  auto red = rref(aug, m, &piv);
  std::vector<RatVec> inv(m, RatVec(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) inv[i][j] = red[i][m + j];
  }
  IntVec lo(m, Int(0)), hi(m, Int(0));
  for (const auto& r : basis) {
    for (std::size_t j = 0; j < m; ++j) {
      if (r[j] < 0) lo[j] += r[j];
      else hi[j] += r[j];
    }
  }
  IntVec x = lo;
  for (;;) {
    bool inside = true;
    for (std::size_t i = 0; i < m && inside; ++i) {
      Rat lam = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (inv[i][j] != 0 && x[j] != 0) lam += inv[i][j] * Rat(x[j]);
      }
      inside = lam >= 0 && lam < 1;
    }
    if (inside) out->insert(x);
    std::size_t j = 0;
    while (j < m && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == m) break;
    ++x[j];
  }
}

std::vector<IntVec> hilbert_basis_pointed(const Polyhedron& cone) {
  if (cone.rays().empty()) return {};
  std::vector<std::vector<IntVec>> simplices;
  triangulate(cone, &simplices);
  std::set<IntVec> gens(cone.rays().begin(), cone.rays().end());
  for (const auto& s : simplices) parallelepiped_points(s, &gens);
  const IntVec zero(cone.ambient_dim(), Int(0));
  gens.erase(zero);
  std::vector<IntVec> g(gens.begin(), gens.end());
  std::vector<IntVec> basis;
  for (const auto& x : g) {
    bool reducible = false;
    for (const auto& y : g) {
      if (y == x) continue;
      IntVec diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
      if (cone_contains(cone, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

Verdict is_gamma_admissible_cone(const Polyhedron& sigma, const GammaSpec& gamma) {
  if (!sigma.is_cone()) throw Error(ErrorKind::NotACone, "not a cone: " + to_string(sigma));
  const std::size_t t = sigma.ambient_dim() - 1;
  if (!in_upper_half_space(sigma, t)) {
    throw Error(ErrorKind::NotInUpperHalfSpace, "cone leaves the half-space t >= 0: " + to_string(sigma));
  }
  if (!sigma.is_pointed()) {
    return Verdict::refuted("cone contains a line", Json{{"line", json_of(sigma.lineality().front())}});
  }
  Json rows = Json::array();
  for (const auto& h : sigma.all_rows_as_ineqs()) {
    Rat k(gamma.multiplier(h.u[t]));
    rows.push_back(json_of(HalfSpace{k * h.u, Rat(0)}));
  }
  return Verdict::proved(Json{{"gamma_rational_rows", rows}});
}

Polyhedron cone_over(const Polyhedron& p, const GammaSpec& gamma) {
  if (p.is_empty()) throw Error(ErrorKind::Empty, "cone over the empty polyhedron");
  if (!p.is_pointed()) throw Error(ErrorKind::NotPointed, "cone over a polyhedron containing a line");
  if (!is_gamma_rational(p, gamma)) throw Error(ErrorKind::NotGammaRational, "polyhedron is not Gamma-rational");
  const std::size_t d = p.ambient_dim();
  std::vector<HalfSpace> rows;
  for (const auto& h : p.all_rows_as_ineqs()) {
    RatVec a = h.u;
    a.push_back(-h.gamma);
    rows.push_back({std::move(a), Rat(0)});
  }
  RatVec t(d + 1, Rat(0));
  t[d] = 1;
  rows.push_back({t, Rat(0)});
  std::vector<IntVec> rays;
  for (const auto& v : p.points()) rays.push_back(homogenize_point(v));
  for (const auto& r : p.rays()) rays.push_back(append(r, 0));
  return Polyhedron::from_trusted(d + 1, std::move(rows), {RatVec(d + 1, Rat(0))}, std::move(rays));
}

Polyhedron cone_at_zero(const Polyhedron& sigma) {
  if (!sigma.is_cone()) throw Error(ErrorKind::NotACone, "not a cone: " + to_string(sigma));
  const std::size_t d = sigma.ambient_dim();
  std::vector<HalfSpace> rows;
  for (const auto& h : sigma.all_rows_as_ineqs()) {
    RatVec a = h.u;
    a.push_back(0);
    rows.push_back({std::move(a), Rat(0)});
  }
  std::vector<IntVec> rays, lin;
  for (const auto& r : sigma.rays()) rays.push_back(append(r, 0));
  for (const auto& l : sigma.lineality()) lin.push_back(append(l, 0));
  return Polyhedron::from_trusted(d + 1, std::move(rows), {RatVec(d + 1, Rat(0))}, std::move(rays), std::move(lin));
}

Polyhedron slice_at(const Polyhedron& sigma, int height) {
  const std::size_t m = sigma.ambient_dim();
  if (m == 0) throw Error(ErrorKind::Input, "slice of a zero-dimensional ambient space");
  const std::size_t d = m - 1;
  if (sigma.is_empty()) return Polyhedron::empty(d);
  std::vector<HalfSpace> rows;
  for (const auto& h : sigma.all_rows_as_ineqs()) {
    RatVec u(h.u.begin(), h.u.end() - 1);
    rows.push_back({std::move(u), h.gamma - h.u[d] * height});
  }
  if (!sigma.is_cone() || !in_upper_half_space(sigma, d)) return Polyhedron::from_rows(d, rows);

  std::vector<RatVec> points;
  std::vector<IntVec> rays, lin;
  for (const auto& r : sigma.rays()) {
    if (r[d] == 0) {
      rays.push_back(drop_last(r));
    } else if (height == 1) {
      RatVec p(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = Rat(r[i], r[d]);
      points.push_back(std::move(p));
    }
  }
  for (const auto& l : sigma.lineality()) lin.push_back(drop_last(l));
  if (height == 0) {
    points.push_back(RatVec(d, Rat(0)));
  } else if (points.empty()) {
    return Polyhedron::empty(d);
  }
  return Polyhedron::from_trusted(d, std::move(rows), std::move(points), std::move(rays), std::move(lin));
}

Polyhedron slice_at_fm(const Polyhedron& sigma, int height) {
  const std::size_t m = sigma.ambient_dim();
  const std::size_t d = m - 1;
  if (sigma.is_empty()) return Polyhedron::empty(d);
  std::vector<HalfSpace> rows = sigma.all_rows_as_ineqs();
  RatVec t(m, Rat(0));
  t[d] = 1;
  rows.push_back({t, Rat(height)});
  rows.push_back({Rat(-1) * t, Rat(-height)});
  std::vector<HalfSpace> projected = fm_project(rows, d);
  if (projected.size() == 1 && is_zero(projected.front().u)) return Polyhedron::empty(d);
  return Polyhedron::from_rows(d, projected);
}

Verdict height_slices(std::size_t d, const std::vector<Polyhedron>& cones, Complex* sigma, Complex* phi) {
  std::vector<Polyhedron> s0, s1;
  for (const auto& c : cones) {
    if (c.ambient_dim() != d + 1) throw Error(ErrorKind::Input, "cone dimension does not match d + 1");
    if (!in_upper_half_space(c, d)) {
      throw Error(ErrorKind::NotInUpperHalfSpace, "cone leaves the half-space t >= 0: " + to_string(c));
    }
    s0.push_back(slice_at(c, 0));
    Polyhedron p = slice_at(c, 1);
    if (!p.is_empty()) s1.push_back(std::move(p));
  }
  Complex c0, c1;
  Verdict v0 = validate_fan(d, s0, &c0);
  Verdict v1 = validate_complex(d, s1, &c1);
  if (v1.is_proved()) {
    for (const auto& p : c1.cells) {
      if (!p.is_pointed()) {
        v1 = Verdict::refuted("height-1 cell contains a line", Json{{"cell", json_of(p)}});
        break;
      }
    }
  }
  if (sigma) *sigma = std::move(c0);
  if (phi) *phi = std::move(c1);
  return combine({{"ht0_fan", v0}, {"ht1_complex", v1}});
}

Verdict assemble_delta(const Complex& sigma, const Complex& phi, const GammaSpec& gamma, HalfSpaceFan* out) {
  const std::size_t d = phi.dim;
  std::vector<Polyhedron> cones;
  for (std::size_t i = 0; i < phi.cells.size(); ++i) {
    const Polyhedron& p = phi.cells[i];
    if (!sigma.has(recession_cone(p))) {
      throw Error(ErrorKind::RecessionNotInSigma, "recession cone of " + to_string(p) + " is not a cone of Sigma");
    }
    if (phi.maximal[i]) cones.push_back(cone_over(p, gamma));
  }
  for (std::size_t i = 0; i < sigma.cells.size(); ++i) {
    if (sigma.maximal[i]) cones.push_back(cone_at_zero(sigma.cells[i]));
  }
  HalfSpaceFan fan;
  fan.dim = d;
  Verdict v = validate_fan(d + 1, cones, &fan.cones);
  fan.sigma = sigma;
  fan.phi = phi;
  if (v.is_proved()) {
    for (const auto& c : fan.cones.cells) {
      Verdict a = is_gamma_admissible_cone(c, gamma);
      if (!a.is_proved()) {
        v = a;
        break;
      }
    }
  }
  if (out) *out = std::move(fan);
  return v;
}

Polyhedron dual_cone(const Polyhedron& sigma) {
  const std::size_t m = sigma.ambient_dim();
  std::vector<HalfSpace> ineqs, eqs;
  for (const auto& r : sigma.rays()) ineqs.push_back({to_rat(r), Rat(0)});
  for (const auto& l : sigma.lineality()) eqs.push_back({to_rat(l), Rat(0)});
  return Polyhedron::from_rows(m, ineqs, eqs);
}

Polyhedron dual_cone_fm(const Polyhedron& sigma) {
  const std::size_t m = sigma.ambient_dim();
  std::vector<RatVec> gens;
  for (const auto& h : sigma.ineqs()) gens.push_back(h.u);
  for (const auto& h : sigma.eqs()) {
    gens.push_back(h.u);
    gens.push_back(Rat(-1) * h.u);
  }
  if (gens.empty()) return Polyhedron::from_rows(m, {}, [&] {
      std::vector<HalfSpace> eqs;
      for (std::size_t i = 0; i < m; ++i) {
        RatVec e(m, Rat(0));
        e[i] = 1;
        eqs.push_back({e, Rat(0)});
      }
      return eqs;
    }());
  // Variables (y, lambda): y - sum lambda_i g_i = 0, lambda >= 0.
  const std::size_t k = gens.size();
  std::vector<HalfSpace> rows;
  for (std::size_t j = 0; j < m; ++j) {
    RatVec a(m + k, Rat(0));
    a[j] = 1;
    for (std::size_t i = 0; i < k; ++i) a[m + i] = -gens[i][j];
    rows.push_back({a, Rat(0)});
    rows.push_back({Rat(-1) * a, Rat(0)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    RatVec a(m + k, Rat(0));
    a[m + i] = 1;
    rows.push_back({a, Rat(0)});
  }
  for (std::size_t i = 0; i < k; ++i) rows = fm_project(rows, m + k - 1 - i);
  return Polyhedron::from_rows(m, rows);
}

std::vector<IntVec> hilbert_basis(const Polyhedron& sigma, const GammaSpec& gamma) {
  if (!gamma.is_discrete()) {
    throw Error(ErrorKind::NonDiscreteGamma, "Hilbert basis needs a discrete value group, got " + gamma.to_string());
  }
  const std::size_t m = sigma.ambient_dim();
  const Rat unit = gamma.unit();
  // Coordinates (u, k) with gamma = unit * k turn M x Gamma into Z^m.
  Polyhedron dual = dual_cone(sigma);
  std::vector<HalfSpace> ineqs, eqs;
  auto rescale = [&](const HalfSpace& h) {
    RatVec a = h.u;
    a[m - 1] *= unit;
    return HalfSpace{std::move(a), Rat(0)};
  };
  for (const auto& h : dual.ineqs()) ineqs.push_back(rescale(h));
  for (const auto& h : dual.eqs()) eqs.push_back(rescale(h));
  Polyhedron cone = Polyhedron::from_rows(m, ineqs, eqs);

  std::vector<IntVec> basis;
  if (cone.lineality().empty()) {
    basis = hilbert_basis_pointed(cone);
  } else {
    LatticeQuotient q = snf_quotient(cone.lineality(), m);
    for (const auto& l : q.saturated_basis) {
      basis.push_back(l);
      IntVec neg = l;
      for (auto& x : neg) x = -x;
      basis.push_back(std::move(neg));
    }
    Polyhedron image = project(cone, q.projection);
    for (const auto& h : hilbert_basis_pointed(image)) basis.push_back(mat_vec(q.section, h));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<IntVec> irreducibles_in_box(const Polyhedron& cone, long bound) {
  const std::size_t m = cone.ambient_dim();
  std::vector<IntVec> pts;
  IntVec x(m, Int(-bound));
  for (;;) {
    if (!is_zero(to_rat(x)) && cone_contains(cone, x)) pts.push_back(x);
    std::size_t j = 0;
    while (j < m && x[j] == bound) {
      x[j] = -bound;
      ++j;
    }
    if (j == m) break;
    ++x[j];
  }
  std::vector<IntVec> out;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& y : pts) {
      if (y == p) continue;
      IntVec diff(m);
      for (std::size_t i = 0; i < m; ++i) diff[i] = p[i] - y[i];
      if (!is_zero(to_rat(diff)) && cone_contains(cone, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(p);
  }
  return out;
}

bool semigroup_membership(const Polyhedron& sigma, const std::vector<MonomialTerm>& f, MembershipRoute route) {
  const std::size_t m = sigma.ambient_dim();
  for (const auto& term : f) {
    if (term.u.size() + 1 != m) throw Error(ErrorKind::Input, "monomial exponent has the wrong length");
    RatVec y = to_rat(term.u);
    y.push_back(term.val);
    if (route == MembershipRoute::DualDescription) {
      for (const auto& r : sigma.rays()) {
        if (dot(y, to_rat(r)) < 0) return false;
      }
      for (const auto& l : sigma.lineality()) {
        if (dot(y, to_rat(l)) != 0) return false;
      }
      for (const auto& p : sigma.points()) {
        if (dot(y, p) < 0) return false;
      }
    } else {
      auto lo = minimize(m, y, sigma.ineqs(), sigma.eqs());
      if (!lo || *lo < 0) return false;
    }
  }
  return true;
}

Verdict is_finite_type(const Polyhedron& sigma, const GammaSpec& gamma) {
  if (gamma.is_discrete()) return Verdict::proved(Json{{"reason", "discrete value group"}});
  Polyhedron p = slice_at(sigma, 1);
  if (p.is_empty()) return Verdict::proved(Json{{"reason", "cone lies in t = 0"}});
  for (const auto& v : p.vertices()) {
    for (const auto& x : v) {
      if (!gamma.contains(x)) {
        return Verdict::refuted("vertex of the height-1 slice is not in N_Gamma",
                                Json{{"vertex", json_of(v)}, {"suggested_e", to_string(gamma.multiplier(x))}});
      }
    }
  }
  return Verdict::proved(Json{{"vertices_checked", p.vertices().size()}});
}

Verdict is_finite_type(const std::vector<Polyhedron>& cones, const GammaSpec& gamma) {
  for (const auto& c : cones) {
    Verdict v = is_finite_type(c, gamma);
    if (!v.is_proved()) return v;
  }
  return Verdict::proved(Json{{"cones_checked", cones.size()}});
}

Int minimal_ramification(const std::vector<RatVec>& vertices, const GammaSpec& gamma) {
  Int e = 1;
  for (const auto& v : vertices) {
    for (const auto& x : v) e = lcm(e, gamma.multiplier(x));
  }
  return e;
}

Int minimal_ramification(const Complex& phi, const GammaSpec& gamma) {
  std::vector<RatVec> verts;
  for (const auto& p : phi.cells) {
    if (p.is_pointed()) verts.insert(verts.end(), p.points().begin(), p.points().end());
  }
  return minimal_ramification(verts, gamma);
}

}  // namespace toricval
