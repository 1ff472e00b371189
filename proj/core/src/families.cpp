#include "toricval/families.hpp"

#include "toricval/lattice.hpp"

#include <algorithm>
#include <set>

namespace toricval {

HalfSpace eval_row(const TemplateRow& row, long n) {
  RatVec u;
  u.reserve(row.u.size());
  for (const auto& p : row.u) u.push_back(p.eval(Rat(n)));
  return {std::move(u), row.gamma.eval(n)};
}

Polyhedron family_eval(const FamilyCell& f, long n) {
  if (n < f.n_min) {
    throw Error(ErrorKind::OutOfDomain,
                "family " + f.label + " evaluated at n = " + std::to_string(n) + " below n_min = " + std::to_string(f.n_min));
  }
  std::vector<HalfSpace> ineqs, eqs;
  for (const auto& r : f.ineqs) ineqs.push_back(eval_row(r, n));
  for (const auto& r : f.eqs) eqs.push_back(eval_row(r, n));
  return Polyhedron::from_rows(f.dim, ineqs, eqs);
}

bool is_constant_family(const FamilyCell& f) {
  const std::string k = family_eval(f, f.n_min).key();
  return family_eval(f, f.n_min + 1).key() == k && family_eval(f, f.n_min + 2).key() == k;
}

RatVec eval(const RatFunVec& v, long n) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(f.eval(n));
  return out;
}

std::vector<RfLimit> limits(const RatFunVec& v) {
  std::vector<RfLimit> out;
  for (const auto& f : v) out.push_back(rf_limit(f));
  return out;
}

bool all_finite(const std::vector<RfLimit>& lim) {
  return std::all_of(lim.begin(), lim.end(), [](const RfLimit& l) { return l.is_finite(); });
}

RatVec finite_values(const std::vector<RfLimit>& lim) {
  RatVec out;
  for (const auto& l : lim) out.push_back(l.value);
  return out;
}

namespace {

using RfMatrix = std::vector<RatFunVec>;

RatFun det(const RfMatrix& m, long n_min) {
  const std::size_t k = m.size();
  if (k == 0) return RatFun::constant(1, n_min);
  if (k == 1) return m[0][0];
  RatFun total = RatFun::constant(0, n_min);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    RfMatrix minor;
    for (std::size_t i = 1; i < k; ++i) {
      RatFunVec row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(std::move(row));
    }
    RatFun term = m[0][j] * det(minor, n_min);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

bool tight(const HalfSpace& h, const RatVec& p) { return dot(h.u, p) == h.gamma; }

// Template rows of f listed as (row, is_equality), equalities first.
std::vector<const TemplateRow*> all_rows(const FamilyCell& f) {
  std::vector<const TemplateRow*> rows;
  for (const auto& r : f.eqs) rows.push_back(&r);
  for (const auto& r : f.ineqs) rows.push_back(&r);
  return rows;
}

std::vector<std::size_t> tight_rows(const FamilyCell& f, long n, const Polyhedron& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.ineqs.size(); ++i) {
    HalfSpace h = eval_row(f.ineqs[i], n);
    bool ok = std::all_of(x.points().begin(), x.points().end(), [&](const RatVec& p) { return tight(h, p); });
    for (const auto& r : x.rays()) ok = ok && dot(h.u, to_rat(r)) == 0;
    for (const auto& l : x.lineality()) ok = ok && dot(h.u, to_rat(l)) == 0;
    if (ok) out.push_back(i);
  }
  return out;
}

struct Tagged {
  Polyhedron cell;
  std::string origin;
  long n = 0;
};

}  // namespace

std::optional<std::vector<VertexPath>> vertex_paths(const FamilyCell& f, long window) {
  const std::size_t d = f.dim;
  const long n0 = f.n_min;
  Polyhedron p0 = family_eval(f, n0);
  if (p0.is_empty() || !p0.is_pointed()) return std::nullopt;
  const auto rows = all_rows(f);
  const std::size_t neq = f.eqs.size();
  std::vector<VertexPath> paths;
  for (const auto& v : p0.vertices()) {
    // Pick d rows tight at v that are independent at n0.
    std::vector<std::size_t> active, chosen;
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      HalfSpace h = eval_row(*rows[i], n0);
      if (!tight(h, v)) continue;
      if (i >= neq) active.push_back(i - neq);
      basis.push_back(h.u);
      if (rank(basis, d) == basis.size()) {
        chosen.push_back(i);
      } else {
        basis.pop_back();
      }
    }
    if (chosen.size() != d) return std::nullopt;
    RfMatrix a(d, RatFunVec(d));
    RatFunVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = RatFun::polynomial(rows[chosen[i]]->u[j], n0);
      b[i] = rows[chosen[i]]->gamma.with_domain_start(n0);
    }
    RatFun den = det(a, n0);
    if (den.is_zero()) return std::nullopt;
    VertexPath path;
    path.active = active;
    for (std::size_t j = 0; j < d; ++j) {
      RfMatrix aj = a;
      for (std::size_t i = 0; i < d; ++i) aj[i][j] = b[i];
      path.coords.push_back(det(aj, n0) / den);
    }
    paths.push_back(std::move(path));
  }
  for (long n = n0; n <= n0 + window; ++n) {
    Polyhedron p = family_eval(f, n);
    if (p.is_empty() || !p.is_pointed() || p.vertices().size() != paths.size()) return std::nullopt;
    std::set<RatVec> seen;
    for (const auto& path : paths) {
      RatVec v;
      try {
        v = eval(path.coords, n);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (std::find(p.vertices().begin(), p.vertices().end(), v) == p.vertices().end()) return std::nullopt;
      for (std::size_t i : path.active) {
        if (!tight(eval_row(f.ineqs[i], n), v)) return std::nullopt;
      }
      seen.insert(v);
    }
    if (seen.size() != paths.size()) return std::nullopt;
  }
  return paths;
}

Polyhedron family_recession(const FamilyCell& f) { return recession_cone(family_eval(f, f.n_min)); }

std::vector<Polyhedron> truncation(const FamilyComplex& phi, long n_max) {
  std::vector<Polyhedron> cells = phi.finite_part.cells;
  for (const auto& f : phi.families) {
    for (long n = f.n_min; n <= n_max; ++n) cells.push_back(family_eval(f, n));
  }
  return cells;
}

Verdict family_validate(const FamilyComplex& phi, long window) {
  if (window < 2) throw Error(ErrorKind::Input, "family validation window must be at least 2");
  std::vector<Tagged> cells;
  for (const auto& c : phi.finite_part.maximal_cells()) cells.push_back({c, "finite", 0});
  Json patterns = Json::array();
  for (const auto& f : phi.families) {
    if (f.dim != phi.dim) throw Error(ErrorKind::Input, "family " + f.label + " has the wrong dimension");
    std::string rec_key;
    for (long n = f.n_min; n <= f.n_min + window + 1; ++n) {
      Polyhedron p = family_eval(f, n);
      if (p.is_empty()) return Verdict::refuted("family member is empty", Json{{"family", f.label}, {"n", n}});
      if (!p.is_pointed()) {
        return Verdict::refuted("family member is not pointed", Json{{"family", f.label}, {"n", n}, {"cell", json_of(p)}});
      }
      const std::string rk = recession_cone(p).key();
      if (rec_key.empty()) rec_key = rk;
      if (rk != rec_key) return Verdict::unknown("recession cone varies with n", Json{{"family", f.label}, {"n", n}});
      cells.push_back({std::move(p), f.label, n});
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Polyhedron& a = cells[i].cell;
      const Polyhedron& b = cells[j].cell;
      if (!intersects(a, b)) continue;
      Polyhedron x = intersect(a, b);
      if (is_face_of(x, a) && is_face_of(x, b)) continue;
      long n = cells[i].origin != "finite" ? cells[i].n : cells[j].n;
      return Verdict::refuted("intersection of two cells is not a common face",
                              Json{{"n", n},
                                   {"origins", Json::array({cells[i].origin, cells[j].origin})},
                                   {"indices", Json::array({cells[i].n, cells[j].n})},
                                   {"cells", Json::array({json_of(a), json_of(b)})},
                                   {"intersection", json_of(x)}});
    }
  }
  for (const auto& f : phi.families) {
    Json first;
    for (long n = f.n_min; n <= f.n_min + window; ++n) {
      Polyhedron a = family_eval(f, n);
      Polyhedron b = family_eval(f, n + 1);
      Json sig;
      if (intersects(a, b)) {
        Polyhedron x = intersect(a, b);
        sig = Json{{"dim", x.dim()}, {"left", tight_rows(f, n, x)}, {"right", tight_rows(f, n + 1, x)}};
      } else {
        sig = Json{{"dim", -1}};
      }
      if (n == f.n_min) {
        first = sig;
      } else if (sig != first) {
        return Verdict::unknown("consecutive intersection pattern is not stable",
                                Json{{"family", f.label}, {"n", n}, {"expected", first}, {"found", sig}});
      }
    }
    if (!vertex_paths(f, window + 1)) {
      return Verdict::unknown("vertex paths are not stable on the window", Json{{"family", f.label}});
    }
    patterns.push_back(Json{{"family", f.label}, {"pattern", first}});
  }
  return Verdict::proved(Json{{"window", window}, {"cells_checked", cells.size()}, {"patterns", patterns}});
}

}  // namespace toricval
