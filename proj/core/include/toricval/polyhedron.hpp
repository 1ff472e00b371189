// Rational polyhedra with a canonical H-description and a cached V-description.
#pragma once

#include "toricval/exact.hpp"

#include <string>
#include <vector>

namespace toricval {

/// P = {w : <u,w> >= gamma for ineqs, <u,w> = gamma for eqs}.
///
/// Every constructor canonicalizes: equalities are the reduced row echelon
/// basis of the affine hull, inequalities are exactly the facets with
/// primitive integer normals reduced modulo the equalities, sorted. Two
/// polyhedra are equal as sets iff their keys agree.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_rows(std::size_t dim, const std::vector<HalfSpace>& ineqs,
                              const std::vector<HalfSpace>& eqs = {});
  static Polyhedron from_generators(std::size_t dim, const std::vector<RatVec>& points,
                                    const std::vector<RatVec>& rays = {},
                                    const std::vector<RatVec>& lineality = {});
  /// Both descriptions supplied by the caller, who guarantees that the
  /// candidate rows and the generators describe the same set. Skips double description.
  static Polyhedron from_trusted(std::size_t dim, std::vector<HalfSpace> candidate_ineqs,
                                 std::vector<RatVec> points, std::vector<IntVec> rays,
                                 std::vector<IntVec> lineality = {});
  static Polyhedron empty(std::size_t dim);
  static Polyhedron whole(std::size_t dim);
  static Polyhedron point(const RatVec& p);

  std::size_t ambient_dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  /// Dimension of the affine hull; -1 when empty.
  int dim() const { return empty_ ? -1 : static_cast<int>(dim_ - eqs_.size()); }
  bool is_pointed() const { return !empty_ && lineality_.empty(); }
  bool is_bounded() const { return !empty_ && rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return dim() == static_cast<int>(dim_); }
  /// Nonempty and every row has gamma = 0.
  bool is_cone() const;

  const std::vector<HalfSpace>& ineqs() const { return ineqs_; }
  const std::vector<HalfSpace>& eqs() const { return eqs_; }
  /// Vertices when pointed; otherwise one point per minimal face.
  const std::vector<RatVec>& points() const { return points_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::string& key() const { return key_; }

  /// Throws NotPointed or Empty as appropriate.
  const std::vector<RatVec>& vertices() const;

  /// The face on which the listed inequality rows are tight (no LP or DD needed).
  Polyhedron face_where_tight(const std::vector<std::size_t>& rows) const;

  /// All rows, equalities expanded into two inequalities.
  std::vector<HalfSpace> all_rows_as_ineqs() const;

  bool operator==(const Polyhedron& other) const { return key_ == other.key_; }
  bool operator<(const Polyhedron& other) const { return key_ < other.key_; }

 private:
  void build(std::vector<HalfSpace> ineqs, std::vector<RatVec> points, std::vector<IntVec> rays,
             std::vector<IntVec> lineality);
  void make_key();

  std::size_t dim_ = 0;
  bool empty_ = true;
  std::vector<HalfSpace> ineqs_;
  std::vector<HalfSpace> eqs_;
  std::vector<RatVec> points_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::string key_;
};

std::string to_string(const HalfSpace& h);
std::string to_string(const Polyhedron& p);

enum class Membership { Closed, RelativeInterior };

bool contains(const Polyhedron& p, const RatVec& x, Membership mode = Membership::Closed);
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron recession_cone(const Polyhedron& p);
/// All nonempty faces including p, sorted by dimension then key.
std::vector<Polyhedron> faces(const Polyhedron& p);
/// The facets of p as polyhedra.
std::vector<Polyhedron> facets(const Polyhedron& p);
bool is_face_of(const Polyhedron& f, const Polyhedron& p);
/// A point in the relative interior.
RatVec relint_point(const Polyhedron& p);
/// Image under the integer matrix m (rows = output coordinates).
Polyhedron project(const Polyhedron& p, const IntMatrix& m);

/// Set comparison by LP, independent of the canonical key.
bool subset_of_lp(const Polyhedron& a, const Polyhedron& b);
bool same_set_lp(const Polyhedron& a, const Polyhedron& b);

/// Brute-force vertex enumeration over active row subsets; test oracle.
std::vector<RatVec> vertices_by_active_sets(std::size_t dim, const std::vector<HalfSpace>& rows);

/// Irredundancy of an inequality row by LP; used to cross-check facet detection.
bool is_redundant_row(const Polyhedron& p, std::size_t row);

/// Rows of p with integer normals and constants in Gamma: each canonical row
/// multiplied by the smallest positive integer that puts its constant in Gamma.
std::vector<HalfSpace> gamma_rational_rows(const Polyhedron& p, const GammaSpec& gamma);
/// Whether p admits a description with u in M and gamma in Gamma.
bool is_gamma_rational(const Polyhedron& p, const GammaSpec& gamma);

}  // namespace toricval
