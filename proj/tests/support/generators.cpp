#include "generators.hpp"

#include "toricval/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

namespace toricval::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rat random_rat(Rng& rng, long lo, long hi, long max_den) {
  long den = uniform(rng, 1, max_den);
  return Rat(uniform(rng, lo * den, hi * den), den);
}

GammaSpec random_gamma(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: return GammaSpec::discrete();
    case 1: return GammaSpec::divisible();
    default: return GammaSpec::prime_localized({2});
  }
}

IntVec random_direction(Rng& rng, std::size_t d, long bound) {
  for (;;) {
    IntVec v(d);
    for (auto& x : v) x = uniform(rng, -bound, bound);
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) return v;
  }
}

Polyhedron random_pointed_polyhedron(Rng& rng, std::size_t d, std::size_t max_rays) {
  std::vector<RatVec> pts, rays;
  const long k = uniform(rng, 1, 4);
  for (long i = 0; i < k; ++i) {
    RatVec p(d);
    for (auto& x : p) x = random_rat(rng, -3, 3, 3);
    pts.push_back(p);
  }
  const IntVec side = random_direction(rng, d, 2);
  const long r = uniform(rng, 0, static_cast<long>(max_rays));
  while (static_cast<long>(rays.size()) < r) {
    IntVec v = random_direction(rng, d, 2);
    if (dot(to_rat(v), to_rat(side)) > 0) rays.push_back(to_rat(v));
  }
  return Polyhedron::from_generators(d, pts, rays);
}

Polyhedron random_cone(Rng& rng, std::size_t d, bool full_dim) {
  const IntVec side = random_direction(rng, d, 2);
  for (;;) {
    std::vector<RatVec> rays;
    const long k = full_dim ? uniform(rng, static_cast<long>(d), static_cast<long>(d) + 1) : uniform(rng, 1, static_cast<long>(d));
    while (static_cast<long>(rays.size()) < k) {
      IntVec v = random_direction(rng, d, 2);
      if (dot(to_rat(v), to_rat(side)) > 0) rays.push_back(to_rat(v));
    }
    Polyhedron c = Polyhedron::from_generators(d, {RatVec(d, Rat(0))}, rays);
    if (!full_dim || c.is_full_dimensional()) return c;
  }
}

namespace {

Int cross(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool ccw_less(const IntVec& a, const IntVec& b) {
  auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

IntVec prim(const IntVec& v) { return primitive(to_rat(v)); }

Polyhedron cone2(const IntVec& a, const IntVec& b) {
  return Polyhedron::from_generators(2, {RatVec{0, 0}}, {to_rat(a), to_rat(b)});
}

}  // namespace

Complex random_complete_fan_2d(Rng& rng) {
  for (;;) {
    std::set<IntVec> dirs;
    const long k = uniform(rng, 3, 6);
    for (long i = 0; i < k; ++i) dirs.insert(prim(random_direction(rng, 2, 3)));
    std::vector<IntVec> rays(dirs.begin(), dirs.end());
    std::sort(rays.begin(), rays.end(), ccw_less);
    if (rays.size() < 3) continue;
    bool ok = true;
    for (std::size_t i = 0; i < rays.size(); ++i) ok = ok && cross(rays[i], rays[(i + 1) % rays.size()]) > 0;
    if (!ok) continue;
    std::vector<Polyhedron> cones;
    for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back(cone2(rays[i], rays[(i + 1) % rays.size()]));
    return face_closure(2, cones);
  }
}

Complex random_fan_2d(Rng& rng) {
  Complex full = random_complete_fan_2d(rng);
  std::vector<Polyhedron> keep{Polyhedron::point(RatVec{0, 0})};
  for (const auto& c : full.cells) {
    if (c.dim() >= 1 && uniform(rng, 0, 2) == 0) keep.push_back(c);
  }
  return face_closure(2, keep);
}

SliceInput random_input_1d(Rng& rng) {
  std::set<Rat> bset;
  const long k = uniform(rng, 1, 4);
  while (static_cast<long>(bset.size()) < k) bset.insert(random_rat(rng, -4, 4, 3));
  std::vector<Rat> b(bset.begin(), bset.end());
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (uniform(rng, 0, 2) > 0) cells.push_back(Polyhedron::from_generators(1, {{b[i]}, {b[i + 1]}}));
  }
  for (const auto& x : b) {
    if (uniform(rng, 0, 3) == 0) cells.push_back(Polyhedron::point({x}));
  }
  std::vector<Polyhedron> fan{Polyhedron::point({Rat(0)})};
  const Polyhedron plus = Polyhedron::from_generators(1, {{Rat(0)}}, {{Rat(1)}});
  const Polyhedron minus = Polyhedron::from_generators(1, {{Rat(0)}}, {{Rat(-1)}});
  if (uniform(rng, 0, 2) == 0) {
    cells.push_back(Polyhedron::from_generators(1, {{b.back()}}, {{Rat(1)}}));
    fan.push_back(plus);
  }
  if (uniform(rng, 0, 2) == 0) {
    cells.push_back(Polyhedron::from_generators(1, {{b.front()}}, {{Rat(-1)}}));
    fan.push_back(minus);
  }
  if (uniform(rng, 0, 3) == 0) fan.push_back(plus);
  if (uniform(rng, 0, 3) == 0) fan.push_back(minus);
  return {face_closure(1, fan), face_closure(1, cells)};
}

SliceInput random_input_2d(Rng& rng) {
  SliceInput out;
  out.sigma = random_complete_fan_2d(rng);
  std::vector<Polyhedron> cells;
  const std::vector<Polyhedron> cones = out.sigma.maximal_cells();
  switch (uniform(rng, 0, 4)) {
    case 0: {  // bounded cells of a line arrangement
      std::vector<HalfSpace> lines;
      const long k = uniform(rng, 3, 4);
      for (long i = 0; i < k; ++i) lines.push_back({to_rat(random_direction(rng, 2, 2)), random_rat(rng, -2, 2, 2)});
      Complex arr = arrangement_complex(2, lines);
      for (const auto& c : arr.maximal_cells()) {
        if (c.is_bounded() && uniform(rng, 0, 1) == 0) cells.push_back(c);
      }
      break;
    }
    case 1:
      for (const auto& c : cones) {
        if (uniform(rng, 0, 1) == 0) cells.push_back(c);
      }
      break;
    case 2: {
      RatVec v{random_rat(rng, -2, 2, 2), random_rat(rng, -2, 2, 2)};
      for (const auto& c : cones) {
        if (uniform(rng, 0, 1) == 0) {
          std::vector<RatVec> rays;
          for (const auto& r : c.rays()) rays.push_back(to_rat(r));
          cells.push_back(Polyhedron::from_generators(2, {v}, rays));
        }
      }
      break;
    }
    case 3:
      cells.push_back(random_pointed_polyhedron(rng, 2, 0));
      break;
    default:
      break;  // empty input complex
  }
  out.phi = face_closure(2, cells);
  return out;
}

HalfSpaceFan assemble(const SliceInput& in, const GammaSpec& gamma) {
  HalfSpaceFan delta;
  Verdict v = assemble_delta(in.sigma, in.phi, gamma, &delta);
  if (!v.is_proved()) {
    std::cerr << "generator produced an inadmissible fan: " << to_json(v).dump() << "\n";
    std::abort();
  }
  return delta;
}

std::vector<Polyhedron> random_halfspace_cones(Rng& rng, std::size_t d, const GammaSpec& gamma) {
  std::vector<Polyhedron> cones;
  for (int attempt = 0;; ++attempt) {
    SliceInput in = d == 1 ? random_input_1d(rng) : random_input_2d(rng);
    if (d == 2 && uniform(rng, 0, 1) == 0) in.sigma = face_closure(2, {Polyhedron::point(RatVec{0, 0})});
    if (d == 2 && in.sigma.maximal_cells().size() == 1) {
      // Sigma = {0}: keep only bounded cells so rec stays inside Sigma.
      std::vector<Polyhedron> bounded;
      for (const auto& c : in.phi.maximal_cells()) {
        if (c.is_bounded()) bounded.push_back(c);
      }
      in.phi = face_closure(2, bounded);
    }
    HalfSpaceFan delta = assemble(in, gamma);
    cones = delta.cones.maximal_cells();
    if (cones.size() <= 7 || attempt > 20) break;
  }
  if (cones.size() > 7) cones.resize(7);
  if (uniform(rng, 0, 2) == 0) {
    // A cone in t >= 0 containing a line: too few independent rows.
    std::vector<HalfSpace> rows{{RatVec(d + 1, Rat(0)), Rat(0)}};
    rows[0].u[d] = 1;
    if (d == 2 && uniform(rng, 0, 1) == 0) {
      RatVec u = to_rat(random_direction(rng, d, 2));
      u.push_back(random_rat(rng, 0, 2, 1));
      rows.push_back({u, Rat(0)});
    }
    cones.push_back(Polyhedron::from_rows(d + 1, rows));
  }
  return cones;
}

}  // namespace toricval::testing
