#include "toricval/compactification.hpp"

#include "toricval/admissible.hpp"
#include "toricval/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace toricval {

RatVec Stratum::project(const RatVec& w) const { return mat_vec(projection, w); }

Stratum make_stratum(const Polyhedron& sigma) {
  if (!sigma.is_cone()) throw Error(ErrorKind::NotACone, "stratum of a non-cone: " + to_string(sigma));
  const std::size_t d = sigma.ambient_dim();
  Stratum s;
  s.sigma = sigma;
  std::vector<IntVec> span = sigma.rays();
  span.insert(span.end(), sigma.lineality().begin(), sigma.lineality().end());
  if (span.empty()) {
    s.rank = d;
    s.projection.assign(d, IntVec(d, Int(0)));
    for (std::size_t i = 0; i < d; ++i) s.projection[i][i] = 1;
    return s;
  }
  LatticeQuotient q = snf_quotient(span, d);
  s.projection = q.projection;
  s.rank = q.quotient_rank;
  return s;
}

std::vector<Stratum> strata_of(const Complex& fan) {
  std::vector<Stratum> out;
  const std::size_t d = fan.dim;
  Polyhedron zero = Polyhedron::point(RatVec(d, Rat(0)));
  out.push_back(make_stratum(zero));
  for (const auto& c : fan.cells) {
    if (c.key() != zero.key()) out.push_back(make_stratum(c));
  }
  return out;
}

Json json_of(const StratumPoint& x) {
  Json rays = Json::array();
  for (const auto& r : x.sigma.rays()) rays.push_back(json_of(r));
  return Json{{"stratum", json_of(x.sigma)}, {"stratum_rays", rays}, {"point", json_of(x.point)}};
}

bool closure_reaches(const Polyhedron& rec, const Polyhedron& sigma) {
  if (rec.is_empty() || sigma.is_empty()) return false;
  if (sigma.ineqs().empty()) return intersects(rec, sigma);
  const std::size_t d = rec.ambient_dim();
  LinearProgram lp;
  lp.num_vars = d + 1;
  auto lift = [&](const RatVec& u, Rat s_coeff) {
    RatVec a = u;
    a.push_back(std::move(s_coeff));
    return a;
  };
  for (const auto& h : rec.ineqs()) lp.constraints.push_back({lift(h.u, 0), Relation::GreaterEq, Rat(0)});
  for (const auto& h : rec.eqs()) lp.constraints.push_back({lift(h.u, 0), Relation::Equal, Rat(0)});
  for (const auto& h : sigma.eqs()) lp.constraints.push_back({lift(h.u, 0), Relation::Equal, Rat(0)});
  for (const auto& h : sigma.ineqs()) lp.constraints.push_back({lift(h.u, -1), Relation::GreaterEq, Rat(0)});
  RatVec cap(d + 1, Rat(0));
  cap[d] = -1;
  lp.constraints.push_back({cap, Relation::GreaterEq, Rat(-1)});
  RatVec obj(d + 1, Rat(0));
  obj[d] = 1;
  lp.objective = obj;
  LpResult r = solve_lp(lp);
  return r.status == LpResult::Status::Optimal && r.value > 0;
}

namespace {

// The sigma-piece of a polyhedron, or nullopt when the closure misses the stratum.
// Rank-zero strata are a single point and are represented by the empty vector.
std::optional<Polyhedron> piece_of(const Polyhedron& p, const Stratum& s) {
  if (p.is_empty() || !closure_reaches(recession_cone(p), s.sigma)) return std::nullopt;
  if (s.is_dense()) return p;
  if (s.rank == 0) return Polyhedron::whole(0);
  return project(p, s.projection);
}

bool piece_contains(const Polyhedron& piece, const Stratum& s, const RatVec& y) {
  if (s.rank == 0) return true;
  return contains(piece, y);
}

bool pieces_meet(const Polyhedron& a, const Polyhedron& b, const Stratum& s) {
  if (s.rank == 0) return true;
  return intersects(a, b);
}

}  // namespace

bool closure_contains(const Polyhedron& p, const Stratum& s, const RatVec& y) {
  auto piece = piece_of(p, s);
  return piece && piece_contains(*piece, s, y);
}

const Polyhedron* CompactifiedSet::piece(const Polyhedron& sigma) const {
  for (const auto& [c, p] : pieces) {
    if (c.key() == sigma.key()) return &p;
  }
  return nullptr;
}

CompactifiedSet compactified_closure(const Polyhedron& p, const Complex& fan) {
  if (p.is_empty()) throw Error(ErrorKind::Empty, "closure of the empty polyhedron");
  if (!p.is_pointed()) throw Error(ErrorKind::NotPointed, "closure of a polyhedron containing a line");
  CompactifiedSet out;
  for (const auto& s : strata_of(fan)) {
    if (auto piece = piece_of(p, s)) out.pieces.emplace_back(s.sigma, std::move(*piece));
  }
  return out;
}

FamilyComplex as_family_complex(const Complex& phi) {
  FamilyComplex out;
  out.dim = phi.dim;
  out.finite_part = phi;
  return out;
}

namespace {

RatFun linear(const RatVec& u, const RatFunVec& v, const Rat& c, long n0) {
  RatFun out = RatFun::constant(-c, n0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] != 0) out = out + RatFun::constant(u[j], n0) * v[j];
  }
  return out;
}

RatFunVec apply(const IntMatrix& q, const RatFunVec& v, long n0) {
  RatFunVec out;
  for (const auto& row : q) out.push_back(linear(to_rat(row), v, Rat(0), n0));
  return out;
}

bool tends_to_plus_infinity(const RatFun& f) { return rf_limit(f).kind == RfLimit::Kind::PlusInfinity; }

// Integer vectors with entries in [-2, 2], zero excluded, in a fixed order.
std::vector<IntVec> small_vectors(std::size_t k) {
  std::vector<IntVec> out;
  if (k == 0) return out;
  IntVec x(k, Int(-2));
  for (;;) {
    if (std::any_of(x.begin(), x.end(), [](const Int& a) { return a != 0; })) out.push_back(x);
    std::size_t j = 0;
    while (j < k && x[j] == 2) {
      x[j] = -2;
      ++j;
    }
    if (j == k) break;
    ++x[j];
  }
  std::stable_sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
    auto norm = [](const IntVec& v) {
      Int s = 0;
      for (const auto& x : v) s += abs(x);
      return s;
    };
    return norm(a) < norm(b);
  });
  return out;
}

struct FamilyData {
  const FamilyCell* cell = nullptr;
  bool constant = false;
  std::optional<std::vector<VertexPath>> paths;
  Polyhedron rec;
};

std::vector<FamilyData> family_data(const FamilyComplex& phi, long window) {
  std::vector<FamilyData> out;
  for (const auto& f : phi.families) {
    FamilyData fd;
    fd.cell = &f;
    fd.constant = is_constant_family(f);
    fd.rec = family_recession(f);
    if (!fd.constant) fd.paths = vertex_paths(f, window);
    out.push_back(std::move(fd));
  }
  return out;
}

enum class Behaviour { Escapes, Accumulates, Undecided };

struct Analysis {
  Behaviour kind = Behaviour::Undecided;
  IntVec ell;
  RatVec limit;
  std::string route;
  std::size_t approach_stratum = 0;
  RatFunVec approach;
};

std::optional<IntVec> escape_functional(const FamilyData& f, const Stratum& s) {
  const std::size_t d = f.cell->dim;
  const long n0 = f.cell->n_min;
  for (const auto& ell : small_vectors(d)) {
    RatVec l = to_rat(ell);
    bool ok = true;
    for (const auto& r : f.rec.rays()) ok = ok && dot(l, to_rat(r)) >= 0;
    for (const auto& r : s.sigma.rays()) ok = ok && dot(l, to_rat(r)) <= 0;
    for (const auto& r : s.sigma.lineality()) ok = ok && dot(l, to_rat(r)) == 0;
    for (std::size_t i = 0; ok && i < f.paths->size(); ++i) {
      ok = tends_to_plus_infinity(linear(l, (*f.paths)[i].coords, Rat(0), n0));
    }
    if (ok) return ell;
  }
  return std::nullopt;
}

Analysis analyze(const FamilyData& f, const std::vector<Stratum>& strata, std::size_t idx) {
  const Stratum& s = strata[idx];
  const long n0 = f.cell->n_min;
  Analysis a;
  if (auto ell = escape_functional(f, s)) {
    a.kind = Behaviour::Escapes;
    a.ell = *ell;
    return a;
  }
  if (closure_reaches(f.rec, s.sigma)) {
    for (const auto& path : *f.paths) {
      RatFunVec z = apply(s.projection, path.coords, n0);
      auto lim = limits(z);
      if (!all_finite(lim)) continue;
      a.kind = Behaviour::Accumulates;
      a.limit = finite_values(lim);
      a.route = "projected vertex path";
      a.approach_stratum = idx;
      a.approach = std::move(z);
      return a;
    }
  }
  if (!s.is_dense()) {
    Polyhedron dual = dual_cone(s.sigma);
    for (const auto& path : *f.paths) {
      auto lim = limits(apply(s.projection, path.coords, n0));
      if (!all_finite(lim)) continue;
      bool escapes = !dual.rays().empty();
      for (const auto& m : dual.rays()) {
        escapes = escapes && tends_to_plus_infinity(linear(to_rat(m), path.coords, Rat(0), n0));
      }
      if (!escapes) continue;
      a.kind = Behaviour::Accumulates;
      a.limit = finite_values(lim);
      a.route = "vertex path converging into the stratum";
      a.approach_stratum = 0;
      a.approach = path.coords;
      return a;
    }
  }
  return a;
}

Json analysis_json(const FamilyData& f, const Stratum& s, const Analysis& a) {
  Json j{{"family", f.cell->label}, {"stratum", json_of(s.sigma)}};
  switch (a.kind) {
    case Behaviour::Escapes: j["escape_functional"] = json_of(a.ell); break;
    case Behaviour::Accumulates:
      j["limit"] = json_of(a.limit);
      j["route"] = a.route;
      break;
    case Behaviour::Undecided: j["undecided"] = true; break;
  }
  return j;
}

Verdict unstable_paths(const FamilyData& f) {
  return Verdict::unknown("vertex paths are not stable", Json{{"family", f.cell->label}});
}

// Every analysis of a nonconstant family over every stratum; nullopt entries
// mark families whose vertex paths could not be solved.
struct Survey {
  std::vector<Stratum> strata;
  std::vector<FamilyData> families;
  std::vector<std::vector<Analysis>> analyses;  // [family][stratum]
};

Survey survey(const FamilyComplex& phi, const Complex& fan, long window) {
  if (fan.dim != phi.dim) throw Error(ErrorKind::StratumMismatch, "fan and complex live in different dimensions");
  Survey s;
  s.strata = strata_of(fan);
  s.families = family_data(phi, window);
  for (const auto& f : s.families) {
    std::vector<Analysis> row;
    if (!f.constant && f.paths) {
      for (std::size_t i = 0; i < s.strata.size(); ++i) row.push_back(analyze(f, s.strata, i));
    }
    s.analyses.push_back(std::move(row));
  }
  return s;
}

// Maximal finite cells together with the members of constant families.
std::vector<Polyhedron> fixed_cells(const FamilyComplex& phi, const Survey& s) {
  std::vector<Polyhedron> cells = phi.finite_part.maximal_cells();
  for (const auto& f : s.families) {
    if (f.constant) cells.push_back(family_eval(*f.cell, f.cell->n_min));
  }
  return cells;
}

bool in_support(const FamilyComplex& phi, const Survey& s, const Stratum& st, const RatVec& y, long window) {
  for (const auto& c : fixed_cells(phi, s)) {
    if (closure_contains(c, st, y)) return true;
  }
  for (const auto& f : s.families) {
    if (f.constant) continue;
    for (long n = f.cell->n_min; n <= f.cell->n_min + window; ++n) {
      if (closure_contains(family_eval(*f.cell, n), st, y)) return true;
    }
  }
  return false;
}

// y lies in a boundary stratum that no nonconstant family reaches, and no fixed cell contains it.
bool outside_union(const FamilyComplex& phi, const Survey& s, const Stratum& st, const RatVec& y) {
  if (st.is_dense()) return false;
  for (const auto& c : fixed_cells(phi, s)) {
    if (closure_contains(c, st, y)) return false;
  }
  for (const auto& f : s.families) {
    if (!f.constant && closure_reaches(f.rec, st.sigma)) return false;
  }
  return true;
}

}  // namespace

std::vector<StratumPoint> accumulation_points(const FamilyComplex& phi, const Complex& fan, long window) {
  Survey s = survey(phi, fan, window);
  std::vector<StratumPoint> out;
  std::set<std::pair<std::string, RatVec>> seen;
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    for (std::size_t k = 0; k < s.analyses[i].size(); ++k) {
      const Analysis& a = s.analyses[i][k];
      if (a.kind != Behaviour::Accumulates) continue;
      if (seen.insert({s.strata[k].sigma.key(), a.limit}).second) out.push_back({s.strata[k].sigma, a.limit});
    }
  }
  return out;
}

Verdict locally_finite_at(const FamilyComplex& phi, const Complex& fan, const StratumPoint& x, long window) {
  Survey s = survey(phi, fan, window);
  std::size_t idx = s.strata.size();
  for (std::size_t k = 0; k < s.strata.size(); ++k) {
    if (s.strata[k].sigma.key() == x.sigma.key()) idx = k;
  }
  if (idx == s.strata.size()) throw Error(ErrorKind::StratumMismatch, "point lies in a stratum outside the fan");
  const Stratum& st = s.strata[idx];
  if (x.point.size() != st.rank) throw Error(ErrorKind::StratumMismatch, "point has the wrong number of coordinates");
  if (phi.is_finite()) return Verdict::proved(Json{{"reason", "finite collection"}});

  Json certs = Json::array();
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    const FamilyData& f = s.families[i];
    if (f.constant) continue;
    if (!f.paths) return unstable_paths(f);
    const Analysis& a = s.analyses[i][idx];
    if (a.kind == Behaviour::Escapes) {
      certs.push_back(analysis_json(f, st, a));
      continue;
    }
    if (a.kind == Behaviour::Accumulates && a.limit == x.point) {
      return Verdict::refuted("family members accumulate at the point",
                              Json{{"witness", json_of(x)}, {"family", f.cell->label}, {"route", a.route}});
    }
    // m = c Q vanishes on span(sigma); it bounds the closures away from x.
    bool found = false;
    for (const auto& c : small_vectors(st.rank)) {
      RatVec m(phi.dim, Rat(0));
      for (std::size_t r = 0; r < st.rank; ++r) m = m + Rat(c[r]) * to_rat(st.projection[r]);
      bool ok = true;
      for (const auto& r : f.rec.rays()) ok = ok && dot(m, to_rat(r)) >= 0;
      const Rat at_x = dot(to_rat(c), x.point);
      for (std::size_t p = 0; ok && p < f.paths->size(); ++p) {
        RfLimit l = rf_limit(linear(m, (*f.paths)[p].coords, Rat(0), f.cell->n_min));
        ok = l.kind == RfLimit::Kind::PlusInfinity || (l.is_finite() && l.value > at_x);
      }
      if (ok) {
        certs.push_back(Json{{"family", f.cell->label}, {"local_functional", json_of(m)}});
        found = true;
        break;
      }
    }
    if (!found) return Verdict::unknown("no separating functional found", Json{{"family", f.cell->label}});
  }
  return Verdict::proved(Json{{"point", json_of(x)}, {"families", certs}});
}

Verdict locally_finite_in_compactification(const FamilyComplex& phi, const Complex& fan, long window) {
  if (phi.is_finite()) return Verdict::proved(Json{{"reason", "finite collection"}});
  Survey s = survey(phi, fan, window);
  Json certs = Json::array();
  std::optional<Verdict> unknown;
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    const FamilyData& f = s.families[i];
    if (f.constant) continue;
    if (!f.paths) {
      if (!unknown) unknown = unstable_paths(f);
      continue;
    }
    for (std::size_t k = 0; k < s.strata.size(); ++k) {
      const Analysis& a = s.analyses[i][k];
      if (a.kind == Behaviour::Accumulates) {
        return Verdict::refuted("closures accumulate at a point of the compactification",
                                Json{{"witness", json_of(StratumPoint{s.strata[k].sigma, a.limit})},
                                     {"family", f.cell->label},
                                     {"route", a.route}});
      }
      if (a.kind == Behaviour::Undecided && !unknown) {
        unknown = Verdict::unknown("neither an escape functional nor an accumulation point was found",
                                   analysis_json(f, s.strata[k], a));
      }
      certs.push_back(analysis_json(f, s.strata[k], a));
    }
  }
  if (unknown) return *unknown;
  return Verdict::proved(Json{{"families", certs}});
}

Verdict closures_locally_finite_in_support(const FamilyComplex& phi, const Complex& fan, long window) {
  if (phi.is_finite()) return Verdict::proved(Json{{"reason", "finite collection"}});
  Survey s = survey(phi, fan, window);
  Json certs = Json::array();
  std::optional<Verdict> unknown;
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    const FamilyData& f = s.families[i];
    if (f.constant) continue;
    if (!f.paths) {
      if (!unknown) unknown = unstable_paths(f);
      continue;
    }
    for (std::size_t k = 0; k < s.strata.size(); ++k) {
      const Analysis& a = s.analyses[i][k];
      const Stratum& st = s.strata[k];
      if (a.kind == Behaviour::Accumulates && in_support(phi, s, st, a.limit, window)) {
        return Verdict::refuted("closures accumulate at a point of their union",
                                Json{{"witness", json_of(StratumPoint{st.sigma, a.limit})},
                                     {"family", f.cell->label},
                                     {"route", a.route}});
      }
      if (a.kind == Behaviour::Accumulates && outside_union(phi, s, st, a.limit)) {
        Json cert = analysis_json(f, st, a);
        cert["outside_union"] = true;
        certs.push_back(std::move(cert));
        continue;
      }
      if (a.kind != Behaviour::Escapes && !unknown) {
        unknown = Verdict::unknown(a.kind == Behaviour::Accumulates
                                       ? "accumulation point not shown to lie in the union"
                                       : "neither an escape functional nor an accumulation point was found",
                                   analysis_json(f, st, a));
      }
      certs.push_back(analysis_json(f, st, a));
    }
  }
  if (unknown) return *unknown;
  return Verdict::proved(Json{{"families", certs}});
}

namespace {

// Members of a nonconstant family whose closures contain y, when finitely many
// can be certified: a functional c separates the projected vertex paths from y
// eventually, and the explicit members before the threshold are listed.
std::optional<std::vector<Polyhedron>> members_containing(const FamilyData& f, const Stratum& st, const RatVec& y) {
  std::vector<Polyhedron> out;
  if (!closure_reaches(f.rec, st.sigma)) return out;
  const long n0 = f.cell->n_min;
  for (const auto& c : small_vectors(st.rank)) {
    RatVec cr = to_rat(c);
    bool ok = true;
    for (const auto& r : f.rec.rays()) ok = ok && dot(cr, st.project(to_rat(r))) >= 0;
    long threshold = n0;
    for (std::size_t p = 0; ok && p < f.paths->size(); ++p) {
      RatFun g = linear(cr, apply(st.projection, (*f.paths)[p].coords, n0), dot(cr, y), n0);
      ok = g.eventual_sign() > 0;
      if (ok) threshold = std::max(threshold, g.eventual_threshold());
    }
    if (!ok) continue;
    for (long n = n0; n <= threshold; ++n) {
      Polyhedron p = family_eval(*f.cell, n);
      if (closure_contains(p, st, y)) out.push_back(std::move(p));
    }
    return out;
  }
  return std::nullopt;
}

// z(n) eventually avoids the stratum piece of cl(C).
bool eventually_outside(const Polyhedron& c, const Stratum& st, const RatFunVec& z, long n0) {
  auto piece = piece_of(c, st);
  if (!piece) return true;
  if (st.rank == 0) return false;
  for (const auto& h : piece->ineqs()) {
    if (linear(h.u, z, h.gamma, n0).eventual_sign() < 0) return true;
  }
  for (const auto& h : piece->eqs()) {
    if (linear(h.u, z, h.gamma, n0).eventual_sign() != 0) return true;
  }
  return false;
}

std::optional<Verdict> quasinet_failure(const FamilyComplex& phi, const Survey& s) {
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    const FamilyData& f = s.families[i];
    if (f.constant || !f.paths) continue;
    for (std::size_t k = 0; k < s.strata.size(); ++k) {
      const Analysis& a = s.analyses[i][k];
      if (a.kind != Behaviour::Accumulates) continue;
      const Stratum& st = s.strata[k];
      std::vector<Polyhedron> containing;
      for (const auto& c : fixed_cells(phi, s)) {
        if (closure_contains(c, st, a.limit)) containing.push_back(c);
      }
      bool finite = true;
      for (const auto& g : s.families) {
        if (g.constant) continue;
        if (!g.paths) {
          finite = false;
          break;
        }
        auto members = members_containing(g, st, a.limit);
        if (!members) {
          finite = false;
          break;
        }
        containing.insert(containing.end(), members->begin(), members->end());
      }
      if (!finite || containing.empty()) continue;
      const Stratum& approach = s.strata[a.approach_stratum];
      bool escapes_all = std::all_of(containing.begin(), containing.end(), [&](const Polyhedron& c) {
        return eventually_outside(c, approach, a.approach, f.cell->n_min);
      });
      if (!escapes_all) continue;
      return Verdict::refuted("the closures containing the witness do not cover a neighborhood of it in the union",
                              Json{{"witness", json_of(StratumPoint{st.sigma, a.limit})},
                                   {"family", f.cell->label},
                                   {"closures_containing_witness", containing.size()},
                                   {"route", a.route}});
    }
  }
  return std::nullopt;
}

void check_recession(const FamilyComplex& phi, const Survey& s) {
  std::set<std::string> keys;
  for (const auto& st : s.strata) keys.insert(st.sigma.key());
  auto check = [&](const Polyhedron& rec, const std::string& what) {
    if (!keys.count(rec.key())) {
      throw Error(ErrorKind::RecessionNotInSigma, "recession cone of " + what + " is not a cone of Sigma");
    }
  };
  for (const auto& c : phi.finite_part.cells) check(recession_cone(c), to_string(c));
  for (const auto& f : s.families) check(f.rec, "family " + f.cell->label);
}

}  // namespace

Verdict condition_star(const FamilyComplex& phi, const Complex& fan, long window) {
  Survey s = survey(phi, fan, window);
  check_recession(phi, s);
  Verdict lemma = closures_locally_finite_in_support(phi, fan, window);
  if (lemma.is_proved()) return Verdict::proved(Json{{"closures_locally_finite", to_json(lemma)}});
  if (auto v = quasinet_failure(phi, s)) return *v;
  return Verdict::unknown("local finiteness of the closures not proved and no quasinet failure certified",
                          Json{{"closures_locally_finite", to_json(lemma)}});
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i ? 1 : 0;
    return n;
  }
};

bool closures_meet(const Polyhedron& a, const Polyhedron& b, const std::vector<Stratum>& strata) {
  for (const auto& st : strata) {
    auto pa = piece_of(a, st);
    if (!pa) continue;
    auto pb = piece_of(b, st);
    if (pb && pieces_meet(*pa, *pb, st)) return true;
  }
  return false;
}

enum class Meet { Yes, No, Undecided };

// Whether cl(F_n) meets cl(C) for some n: searched on the window, otherwise
// ruled out stratum by stratum with a row of C's piece that the projected
// vertex paths eventually violate, plus an explicit check up to the threshold.
Meet family_meets_cell(const FamilyData& f, const Polyhedron& c, const std::vector<Stratum>& strata, long window) {
  const long n0 = f.cell->n_min;
  for (long n = n0; n <= n0 + window; ++n) {
    if (closures_meet(family_eval(*f.cell, n), c, strata)) return Meet::Yes;
  }
  if (!f.paths) return Meet::Undecided;
  long threshold = n0 + window;
  for (const auto& st : strata) {
    auto piece = piece_of(c, st);
    if (!piece || !closure_reaches(f.rec, st.sigma)) continue;
    if (st.rank == 0) return Meet::Yes;
    std::vector<RatFunVec> z;
    for (const auto& p : *f.paths) z.push_back(apply(st.projection, p.coords, n0));
    auto separates = [&](const RatVec& u, const Rat& g, int side) {
      for (const auto& r : f.rec.rays()) {
        if (side * sign(dot(u, st.project(to_rat(r)))) > 0) return false;
      }
      long t = n0;
      for (const auto& zi : z) {
        RatFun e = linear(u, zi, g, n0);
        if (side * e.eventual_sign() >= 0) return false;
        t = std::max(t, e.eventual_threshold());
      }
      threshold = std::max(threshold, t);
      return true;
    };
    bool ok = false;
    for (const auto& h : piece->ineqs()) ok = ok || separates(h.u, h.gamma, 1);
    for (const auto& h : piece->eqs()) ok = ok || separates(h.u, h.gamma, 1) || separates(h.u, h.gamma, -1);
    if (!ok) return Meet::Undecided;
  }
  for (long n = n0 + window + 1; n <= threshold; ++n) {
    if (closures_meet(family_eval(*f.cell, n), c, strata)) return Meet::Yes;
  }
  return Meet::No;
}

}  // namespace

Verdict domain_isomorphism_verdict(const FamilyComplex& phi, const Complex& fan, long window) {
  Survey s = survey(phi, fan, window);
  std::vector<Polyhedron> cells = fixed_cells(phi, s);
  std::vector<std::size_t> fam_nodes;  // indices into s.families
  for (std::size_t i = 0; i < s.families.size(); ++i) {
    const FamilyData& f = s.families[i];
    if (f.constant) continue;
    if (!f.paths) return unstable_paths(f);
    for (long n = f.cell->n_min; n <= f.cell->n_min + window; ++n) {
      if (!intersects(family_eval(*f.cell, n), family_eval(*f.cell, n + 1))) {
        return Verdict::unknown("consecutive family members do not meet", Json{{"family", f.cell->label}, {"n", n}});
      }
    }
    fam_nodes.push_back(i);
  }
  const std::size_t nc = cells.size();
  const std::size_t nodes = nc + fam_nodes.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges, undecided, accumulation;
  std::vector<std::vector<std::optional<Polyhedron>>> pieces(nc);
  for (std::size_t a = 0; a < nc; ++a) {
    for (const auto& st : s.strata) pieces[a].push_back(piece_of(cells[a], st));
  }
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = a + 1; b < nc; ++b) {
      for (std::size_t k = 0; k < s.strata.size(); ++k) {
        if (pieces[a][k] && pieces[b][k] && pieces_meet(*pieces[a][k], *pieces[b][k], s.strata[k])) {
          edges.emplace_back(a, b);
          break;
        }
      }
    }
  }
  for (std::size_t j = 0; j < fam_nodes.size(); ++j) {
    const FamilyData& f = s.families[fam_nodes[j]];
    for (std::size_t a = 0; a < nc; ++a) {
      Meet m = family_meets_cell(f, cells[a], s.strata, window);
      if (m == Meet::Yes) edges.emplace_back(a, nc + j);
      if (m == Meet::Undecided) undecided.emplace_back(a, nc + j);
    }
    for (std::size_t k = j + 1; k < fam_nodes.size(); ++k) {
      const FamilyData& g = s.families[fam_nodes[k]];
      bool met = false;
      for (long n = f.cell->n_min; n <= f.cell->n_min + window && !met; ++n) {
        Polyhedron fn = family_eval(*f.cell, n);
        for (long m = g.cell->n_min; m <= g.cell->n_min + window && !met; ++m) {
          met = closures_meet(fn, family_eval(*g.cell, m), s.strata);
        }
      }
      if (met) edges.emplace_back(nc + j, nc + k);
      else undecided.emplace_back(nc + j, nc + k);
    }
    // Accumulation edges: the family's limit points lying in other closures.
    for (std::size_t k = 0; k < s.strata.size(); ++k) {
      const Analysis& an = s.analyses[fam_nodes[j]][k];
      if (an.kind != Behaviour::Accumulates) continue;
      for (std::size_t a = 0; a < nc; ++a) {
        if (closure_contains(cells[a], s.strata[k], an.limit)) accumulation.emplace_back(a, nc + j);
      }
      for (std::size_t k2 = 0; k2 < fam_nodes.size(); ++k2) {
        const FamilyData& g = s.families[fam_nodes[k2]];
        for (long n = g.cell->n_min; n <= g.cell->n_min + window; ++n) {
          if (closure_contains(family_eval(*g.cell, n), s.strata[k], an.limit)) {
            if (k2 != j) accumulation.emplace_back(nc + k2, nc + j);
            break;
          }
        }
      }
    }
  }
  UnionFind nerve(nodes), joined(nodes);
  for (const auto& [a, b] : edges) {
    nerve.unite(a, b);
    joined.unite(a, b);
  }
  for (const auto& [a, b] : accumulation) joined.unite(a, b);
  const std::size_t nerve_components = nodes == 0 ? 0 : nerve.components();
  const std::size_t union_components = nodes == 0 ? 0 : joined.components();
  Json cert{{"nerve_components", nerve_components},
            {"union_components", union_components},
            {"nodes", nodes},
            {"nerve_edges", edges.size()},
            {"accumulation_edges", accumulation.size()}};
  for (const auto& [a, b] : undecided) {
    if (nerve.find(a) != nerve.find(b) || joined.find(a) != joined.find(b)) {
      cert["undecided_pair"] = Json::array({a, b});
      return Verdict::unknown("an undecided pair of closures would change the component count", cert);
    }
  }
  if (nerve_components != union_components) {
    Json witnesses = Json::array();
    for (const auto& x : accumulation_points(phi, fan, window)) witnesses.push_back(json_of(x));
    cert["accumulation_points"] = witnesses;
    return Verdict::refuted("the nerve and the union have different numbers of connected components", cert);
  }
  Verdict star = condition_star(phi, fan, window);
  cert["condition_star"] = to_json(star);
  if (star.is_proved()) return Verdict::proved(cert);
  return Verdict::unknown("component counts agree but condition (*) is not proved", cert);
}

}  // namespace toricval
