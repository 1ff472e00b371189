#include "toricval/lp.hpp"

#include <algorithm>
#include <map>

namespace toricval {

namespace {

// Dense tableau for max c.y s.t. T y = rhs, y >= 0, with an explicit basis.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, RatVec(cols + 1, Rat(0))), basis_(rows, 0), cols_(cols) {}

  Rat& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rat& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void set_objective(const RatVec& c) {
    z_.assign(cols_ + 1, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = c[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rat& cb = c[basis_[i]];
      if (cb != 0) axpy(z_, -cb, t_[i]);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Rat p = t_[r][e];
    if (p != 1) {
      for (auto& x : t_[r]) {
        if (x != 0) x /= p;
      }
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_[i][e] == 0) continue;
      Rat f = t_[i][e];
      axpy(t_[i], -f, t_[r]);
    }
    if (!z_.empty() && z_[e] != 0) {
      Rat f = z_[e];
      axpy(z_, -f, t_[r]);
    }
    basis_[r] = e;
  }

  enum class Outcome { Optimal, Unbounded };

  // Bland's rule: lowest-index improving column, lowest basic index on ratio ties.
  Outcome run(const std::vector<bool>& allowed, std::size_t* unbounded_col) {
    for (;;) {
      std::size_t e = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && z_[j] > 0) {
          e = j;
          break;
        }
      }
      if (e == cols_) return Outcome::Optimal;
      std::size_t r = rows();
      Rat best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][e] <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][e];
        if (r == rows() || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == rows()) {
        *unbounded_col = e;
        return Outcome::Unbounded;
      }
      pivot(r, e);
    }
  }

  const Rat& z_rhs() const { return z_[cols_]; }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + static_cast<long>(i));
    basis_.erase(basis_.begin() + static_cast<long>(i));
  }

 private:
  static void axpy(RatVec& y, const Rat& a, const RatVec& x) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (x[j] != 0) y[j] += a * x[j];
    }
  }

  std::vector<RatVec> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  RatVec z_;
};

HalfSpace infeasible_row(std::size_t n) { return HalfSpace{RatVec(n, Rat(0)), Rat(1)}; }

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw Error(ErrorKind::Input, "constraint length does not match variable count");
  }
  if (lp.objective && lp.objective->size() != n) {
    throw Error(ErrorKind::Input, "objective length does not match variable count");
  }

  const std::size_t m = lp.constraints.size();
  std::size_t num_slack = 0;
  for (const auto& c : lp.constraints) num_slack += c.rel == Relation::GreaterEq ? 1 : 0;

  // Columns: p_0..p_{n-1}, q_0..q_{n-1}, slacks, artificials.
  const std::size_t slack0 = 2 * n;
  const std::size_t art0 = slack0 + num_slack;
  const std::size_t cols = art0 + m;
  Tableau tab(m, cols);
  std::size_t s = slack0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    bool flip = c.constant < 0;
    Rat sg = flip ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      tab.at(i, j) = sg * c.coeffs[j];
      tab.at(i, n + j) = -sg * c.coeffs[j];
    }
    if (c.rel == Relation::GreaterEq) tab.at(i, s++) = -sg;
    tab.at(i, art0 + i) = 1;
    tab.rhs(i) = sg * c.constant;
    tab.basis()[i] = art0 + i;
  }

  RatVec phase1(cols, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  tab.set_objective(phase1);
  std::vector<bool> allowed(cols, true);
  std::size_t unb = 0;
  tab.run(allowed, &unb);  // phase 1 is bounded by construction
  LpResult result;
  if (tab.z_rhs() != 0) {
    result.status = LpResult::Status::Infeasible;
    return result;
  }

  // Drive artificials out of the basis; rows where that fails are redundant.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < art0) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < art0 && tab.at(i, j) == 0) ++j;
    if (j < art0) {
      tab.pivot(i, j);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;

  auto extract_point = [&]() {
    RatVec y(cols, Rat(0));
    for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    return x;
  };

  if (!lp.objective) {
    result.status = LpResult::Status::Feasible;
    result.point = extract_point();
    return result;
  }

  RatVec c(cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = (*lp.objective)[j];
    c[n + j] = -(*lp.objective)[j];
  }
  tab.set_objective(c);
  if (tab.run(allowed, &unb) == Tableau::Outcome::Unbounded) {
    RatVec dir(cols, Rat(0));
    dir[unb] = 1;
    for (std::size_t i = 0; i < tab.rows(); ++i) dir[tab.basis()[i]] = -tab.at(i, unb);
    result.status = LpResult::Status::Unbounded;
    result.ray.resize(n);
    for (std::size_t j = 0; j < n; ++j) result.ray[j] = dir[j] - dir[n + j];
    result.point = extract_point();
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.point = extract_point();
  result.value = dot(*lp.objective, result.point);
  return result;
}

LinearProgram make_lp(std::size_t num_vars, const std::vector<HalfSpace>& ineqs, const std::vector<HalfSpace>& eqs) {
  LinearProgram lp;
  lp.num_vars = num_vars;
  for (const auto& h : ineqs) lp.constraints.push_back({h.u, Relation::GreaterEq, h.gamma});
  for (const auto& h : eqs) lp.constraints.push_back({h.u, Relation::Equal, h.gamma});
  return lp;
}

bool is_feasible(std::size_t num_vars, const std::vector<HalfSpace>& ineqs, const std::vector<HalfSpace>& eqs) {
  return solve_lp(make_lp(num_vars, ineqs, eqs)).status != LpResult::Status::Infeasible;
}

std::optional<Rat> minimize(std::size_t num_vars, const RatVec& c, const std::vector<HalfSpace>& ineqs,
                            const std::vector<HalfSpace>& eqs) {
  LinearProgram lp = make_lp(num_vars, ineqs, eqs);
  RatVec neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  lp.objective = neg;
  LpResult r = solve_lp(lp);
  switch (r.status) {
    case LpResult::Status::Infeasible: throw Error(ErrorKind::Empty, "minimize over an empty system");
    case LpResult::Status::Unbounded: return std::nullopt;
    default: return -r.value;
  }
}

std::vector<HalfSpace> remove_redundant(std::size_t num_vars, std::vector<HalfSpace> ineqs) {
  std::map<RatVec, Rat> best;
  for (auto& h : ineqs) {
    if (is_zero(h.u)) {
      if (h.gamma > 0) return {infeasible_row(num_vars)};
      continue;
    }
    Rat c = primitive_scale(h.u);
    RatVec u = c * h.u;
    Rat g = c * h.gamma;
    auto it = best.find(u);
    if (it == best.end()) best.emplace(std::move(u), g);
    else if (g > it->second) it->second = g;
  }
  std::vector<HalfSpace> rows;
  rows.reserve(best.size());
  for (auto& [u, g] : best) rows.push_back({u, g});
  if (!is_feasible(num_vars, rows)) return {infeasible_row(num_vars)};

  for (std::size_t i = 0; i < rows.size();) {
    std::vector<HalfSpace> others;
    others.reserve(rows.size() - 1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != i) others.push_back(rows[k]);
    }
    auto lo = minimize(num_vars, rows[i].u, others);
    if (lo && *lo >= rows[i].gamma) {
      rows.erase(rows.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  return rows;
}

std::vector<HalfSpace> fm_project(const std::vector<HalfSpace>& ineqs, std::size_t eliminate) {
  if (ineqs.empty()) return {};
  const std::size_t d = ineqs.front().u.size();
  if (d == 0 || eliminate >= d) throw Error(ErrorKind::Input, "fm_project: elimination index out of range");
  for (const auto& h : ineqs) {
    if (h.u.size() != d) throw Error(ErrorKind::Input, "fm_project: rows of unequal length");
  }

  auto drop = [&](const HalfSpace& h) {
    HalfSpace out;
    out.u.reserve(d - 1);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != eliminate) out.u.push_back(h.u[j]);
    }
    out.gamma = h.gamma;
    return out;
  };

  std::vector<const HalfSpace*> pos, neg;
  std::vector<HalfSpace> out;
  for (const auto& h : ineqs) {
    int sg = sign(h.u[eliminate]);
    if (sg > 0) pos.push_back(&h);
    else if (sg < 0) neg.push_back(&h);
    else out.push_back(drop(h));
  }
  for (const HalfSpace* p : pos) {
    for (const HalfSpace* q : neg) {
      Rat a = p->u[eliminate];
      Rat b = -q->u[eliminate];
      HalfSpace comb{b * p->u + a * q->u, b * p->gamma + a * q->gamma};
      out.push_back(drop(comb));
    }
  }
  return remove_redundant(d - 1, std::move(out));
}

}  // namespace toricval
