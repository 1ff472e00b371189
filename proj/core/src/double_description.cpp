#include "toricval/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

namespace toricval {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVec v;
  Bits zero;  // inequalities (by index) tight on v
};

Int idot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

IntVec make_primitive(IntVec v) {
  Int g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// s0 * v - c * l0
IntVec eliminate(const IntVec& v, const Int& s0, const Int& c, const IntVec& l0) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s0 * v[i] - c * l0[i];
  return make_primitive(std::move(out));
}

IntVec to_int_row(const RatVec& a) { return primitive(a); }

}  // namespace

ConeGenerators cone_generators(const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs, std::size_t dim) {
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }

  // Equalities only cut down the lineality space.
  for (const auto& row : eqs) {
    if (row.size() != dim) throw Error(ErrorKind::Input, "cone_generators: row length mismatch");
    IntVec a = to_int_row(row);
    std::size_t k = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (idot(a, lin[i]) != 0) {
        k = i;
        break;
      }
    }
    if (k == lin.size()) continue;
    IntVec l0 = lin[k];
    Int s0 = idot(a, l0);
    lin.erase(lin.begin() + static_cast<long>(k));
    for (auto& l : lin) {
      Int c = idot(a, l);
      if (c != 0) l = eliminate(l, s0, c, l0);
    }
  }

  const std::size_t m = ineqs.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < m; ++k) {
    if (ineqs[k].size() != dim) throw Error(ErrorKind::Input, "cone_generators: row length mismatch");
    if (is_zero(ineqs[k])) continue;
    IntVec a = to_int_row(ineqs[k]);

    std::size_t hit = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (idot(a, lin[i]) != 0) {
        hit = i;
        break;
      }
    }
    if (hit < lin.size()) {
      IntVec l0 = lin[hit];
      Int s0 = idot(a, l0);
      if (s0 < 0) {
        for (auto& x : l0) x = -x;
        s0 = -s0;
      }
      lin.erase(lin.begin() + static_cast<long>(hit));
      for (auto& l : lin) {
        Int c = idot(a, l);
        if (c != 0) l = eliminate(l, s0, c, l0);
      }
      for (auto& r : rays) {
        Int c = idot(a, r.v);
        if (c != 0) r.v = eliminate(r.v, s0, c, l0);
        r.zero.set(k);
      }
      Bits z(m);
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      rays.push_back({std::move(l0), std::move(z)});
      continue;
    }

    std::vector<Int> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = idot(a, rays[i].v);
      if (s[i] > 0) pos.push_back(i);
      else if (s[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (s[i] == 0) rays[i].zero.set(k);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = s[p] * rays[n].v[j] - s[n] * rays[p].v[j];
        common.set(k);
        next.push_back({make_primitive(std::move(v)), std::move(common)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) {
        next.push_back(std::move(rays[i]));
      } else if (s[i] == 0) {
        rays[i].zero.set(k);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lin);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace toricval
