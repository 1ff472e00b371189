#include "toricval/lattice.hpp"

#include <utility>

namespace toricval {

std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t cols, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols) { return rref(rows, cols).size(); }

std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rat(v));
  return rank(r, cols);
}

std::vector<IntVec> nullspace(const std::vector<RatVec>& rows, std::size_t cols) {
  std::vector<std::size_t> piv;
  auto r = rref(rows, cols, &piv);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) x[piv[i]] = -r[i][f];
    basis.push_back(primitive(x));
  }
  return basis;
}

Rat determinant(std::vector<RatVec> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Int determinant(const std::vector<IntVec>& m) {
  std::vector<RatVec> r;
  r.reserve(m.size());
  for (const auto& v : m) r.push_back(to_rat(v));
  return numerator(determinant(std::move(r)));
}

LatticeQuotient snf_quotient(const std::vector<IntVec>& sublattice_basis, std::size_t d) {
  IntMatrix m = sublattice_basis;
  for (const auto& row : m) {
    if (row.size() != d) throw Error(ErrorKind::Input, "snf_quotient: vector length does not match dimension");
  }
  IntMatrix u(d, IntVec(d, Int(0)));
  IntMatrix v(d, IntVec(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = v[i][i] = 1;

  // Column ops act on m and u; v = u^{-1} receives the inverse row ops.
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
    std::swap(v[a], v[b]);
  };
  auto add_col = [&](std::size_t target, std::size_t source, const Int& k) {  // col_t += k col_s
    for (auto& row : m) row[target] += k * row[source];
    for (auto& row : u) row[target] += k * row[source];
    for (std::size_t j = 0; j < d; ++j) v[source][j] -= k * v[target][j];
  };
  auto negate_col = [&](std::size_t a) {
    for (auto& row : m) row[a] = -row[a];
    for (auto& row : u) row[a] = -row[a];
    for (auto& x : v[a]) x = -x;
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < m.size() && pc < d; ++i) {
    for (;;) {
      std::size_t best = d;
      for (std::size_t c = pc; c < d; ++c) {
        if (m[i][c] != 0 && (best == d || abs(m[i][c]) < abs(m[i][best]))) best = c;
      }
      if (best == d) break;
      swap_cols(pc, best);
      bool done = true;
      for (std::size_t c = pc + 1; c < d; ++c) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[i][pc];
        add_col(c, pc, -q);
        if (m[i][c] != 0) done = false;
      }
      if (done) {
        if (m[i][pc] < 0) negate_col(pc);
        ++pc;
        break;
      }
    }
  }

  LatticeQuotient out;
  out.rank = pc;
  out.quotient_rank = d - pc;
  out.projection.assign(out.quotient_rank, IntVec(d, Int(0)));
  out.section.assign(d, IntVec(out.quotient_rank, Int(0)));
  for (std::size_t j = 0; j < out.quotient_rank; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      out.projection[j][i] = u[i][pc + j];
      out.section[i][j] = v[pc + j][i];
    }
  }
  out.saturated_basis.assign(v.begin(), v.begin() + static_cast<long>(pc));
  return out;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, std::size_t d) {
  return snf_quotient(a, d).projection;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& x) {
  IntVec out(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

RatVec mat_vec(const IntMatrix& m, const RatVec& x) {
  RatVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (m[i][j] != 0 && x[j] != 0) out[i] += Rat(m[i][j]) * x[j];
    }
  }
  return out;
}

}  // namespace toricval
