// Exact linear programming over the rationals and Fourier-Motzkin projection.
#pragma once

#include "toricval/exact.hpp"

#include <optional>
#include <vector>

namespace toricval {

enum class Relation { GreaterEq, Equal };

/// coeffs . x  (>= | =)  constant
struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::GreaterEq;
  Rat constant;
};

/// Variables are free. The objective, when present, is maximized.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  std::optional<RatVec> objective;
};

struct LpResult {
  enum class Status { Infeasible, Unbounded, Optimal, Feasible };
  Status status = Status::Infeasible;
  Rat value;
  RatVec point;
  /// For Unbounded: a recession direction with positive objective slope.
  RatVec ray;
};

LpResult solve_lp(const LinearProgram& lp);

/// Convenience wrappers on half-space systems (u . x >= gamma).
LinearProgram make_lp(std::size_t num_vars, const std::vector<HalfSpace>& ineqs,
                      const std::vector<HalfSpace>& eqs = {});
bool is_feasible(std::size_t num_vars, const std::vector<HalfSpace>& ineqs,
                 const std::vector<HalfSpace>& eqs = {});
/// min of c . x over the system; nullopt when unbounded below; throws Empty if infeasible.
std::optional<Rat> minimize(std::size_t num_vars, const RatVec& c, const std::vector<HalfSpace>& ineqs,
                            const std::vector<HalfSpace>& eqs = {});

/// Projection of {x : ineqs} along coordinate `eliminate`. Rows are normalized
/// to primitive integer normals, duplicates and LP-redundant rows dropped.
/// An infeasible result is returned as the single row 0 >= 1.
std::vector<HalfSpace> fm_project(const std::vector<HalfSpace>& ineqs, std::size_t eliminate);

/// Scale, dedupe and strip rows that are implied by the others (one LP per row).
std::vector<HalfSpace> remove_redundant(std::size_t num_vars, std::vector<HalfSpace> ineqs);

}  // namespace toricval
