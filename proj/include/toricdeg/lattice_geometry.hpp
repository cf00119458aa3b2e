#pragma once

#include <optional>
#include <utility>

#include "toricdeg/rational.hpp"

/// Exact rational convex polytopes: H/V representations, lattice points,
/// dilation, normality and Delzant smoothness.
///
/// Every predicate is evaluated over GMP rationals. Vertex enumeration
/// intersects all n-subsets of the defining halfspaces and keeps the feasible
/// solutions, which is adequate for the intended scale (n <= 8, a few dozen
/// halfspaces). Lattice points are found by scanning the integer bounding box.
namespace toricdeg::geom {

/// <p, normal> <= rhs, with `normal` a primitive nonzero integer vector.
struct HalfSpace {
  IntVector normal;
  Rational rhs;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

bool operator<(const HalfSpace& a, const HalfSpace& b);

/// Finite set of integer vectors kept sorted (lexicographically) and unique.
class LatticePointSet {
 public:
  explicit LatticePointSet(std::size_t dim = 0) : dim_(dim) {}
  LatticePointSet(std::size_t dim, std::vector<IntVector> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<IntVector>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const IntVector& p) const;
  /// Points of *this that are missing from `other`, in lexicographic order.
  std::vector<IntVector> difference(const LatticePointSet& other) const;

  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<IntVector> points_;
};

struct VPolytope {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;  // sorted lexicographically
};

/// Polytope {p : <p, a_i> <= b_i}. Normals are made primitive and the list is
/// sorted and deduplicated on construction (for equal normals the tighter
/// inequality wins). Boundedness, emptiness, the vertex set and the affine
/// dimension are computed eagerly, so instances are immutable values that
/// can be shared across threads.
class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<HalfSpace> halfspaces);
  /// Rows [a_1 .. a_n, b] with rational entries; normals are scaled to
  /// primitive integers.
  static HPolytope from_rows(std::size_t dim, const RationalMatrix& rows);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
  bool is_bounded() const noexcept { return bounded_; }
  bool is_empty() const noexcept { return empty_; }
  /// -1 when empty; only meaningful for bounded polytopes.
  int affine_dimension() const noexcept { return affine_dim_; }
  bool is_full_dimensional() const noexcept { return affine_dim_ == static_cast<int>(dim_); }
  /// Throws PreconditionError("unbounded") / ("empty").
  const std::vector<RationalVector>& vertex_list() const;

  bool contains(const RationalVector& p) const;
  bool contains(const IntVector& p) const;

 private:
  std::size_t dim_;
  std::vector<HalfSpace> halfspaces_;
  bool bounded_ = true;
  bool empty_ = false;
  int affine_dim_ = -1;
  std::vector<RationalVector> vertices_;
};

/// x -> linear * x + translation, with |det linear| = 1.
struct AffineUnimodularMap {
  IntMatrix linear;
  RationalVector translation;

  RationalVector apply(const RationalVector& x) const;
};

struct NormalityReport {
  bool normal = true;
  std::optional<std::pair<int, IntVector>> counterexample;  // (m, point of mP not a sum)
};

struct SmoothnessReport {
  bool smooth = true;
  std::optional<RationalVector> vertex;  // first offending vertex
};

struct NormalizedPolytope {
  HPolytope polytope;
  AffineUnimodularMap map;
};

VPolytope vertices(const HPolytope& p);

/// Minimal H-representation of the convex hull. Lower-dimensional hulls are
/// encoded with opposite pairs of halfspaces for the affine hull equations
/// and report affine_dimension() < dim().
HPolytope hull(std::size_t dim, const std::vector<RationalVector>& points);
HPolytope hull(const LatticePointSet& points);

/// Closed semantics: boundary points are included.
LatticePointSet lattice_points(const HPolytope& p);

HPolytope dilate(const HPolytope& p, const Rational& factor);
HPolytope dilate(const HPolytope& p, int m);

/// Image of `p` under x -> linear * x + translation (linear unimodular).
HPolytope transform(const HPolytope& p, const AffineUnimodularMap& map);

bool is_integral(const HPolytope& p);

/// Same point set (compares vertex sets of the bounded polytopes).
bool same_point_set(const HPolytope& a, const HPolytope& b);

LatticePointSet minkowski_sum(const LatticePointSet& a, const LatticePointSet& b);

/// Checks that for 2 <= m <= max_level every lattice point of mP is a sum of
/// m lattice points of P. Throws PreconditionError for non-integral P.
NormalityReport is_normal(const HPolytope& p, int max_level);

/// Primitive edge directions at every vertex must form a Z-basis.
/// Throws PreconditionError for unbounded or lower-dimensional input.
SmoothnessReport is_delzant_smooth(const HPolytope& p);

/// Primitive edge directions at vertex `v` (requires a simple vertex),
/// ordered by the index of their first nonzero coordinate.
std::vector<IntVector> edge_directions(const HPolytope& p, const RationalVector& v);

/// Moves smooth vertex `v` to the origin with its edges along e_1..e_n.
NormalizedPolytope normalize_at_vertex(const HPolytope& p, const RationalVector& v);

/// True when the origin is a vertex whose primitive edges are e_1, ..., e_n.
bool is_normalized_at_origin(const HPolytope& p);

/// Volume of the simplex with the given n+1 vertices.
Rational simplex_volume(const std::vector<RationalVector>& vertices);

}  // namespace toricdeg::geom
