#include "toricdeg/lattice_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "toricdeg/error.hpp"
#include "toricdeg/linalg.hpp"
#include "toricdeg/lp.hpp"

namespace toricdeg::geom {

namespace {

struct RationalLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const { return lex_less(a, b); }
};

void sort_unique(std::vector<RationalVector>& pts) {
  std::sort(pts.begin(), pts.end(), RationalLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int affine_dimension_of(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return -1;
  RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(linalg::rank(std::move(diffs)));
}

Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain on sorted, deduplicated planar points; collinear
// boundary points are dropped.
std::vector<RationalVector> planar_extreme_points(const std::vector<RationalVector>& pts) {
  if (pts.size() < 3) return pts;
  std::vector<RationalVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  sort_unique(h);
  return h;
}

bool in_hull_of_others(const std::vector<RationalVector>& pts, std::size_t skip) {
  const std::size_t dim = pts[skip].size();
  const std::size_t cols = pts.size() - 1;
  RationalMatrix a(dim + 1, RationalVector(cols, 0));
  RationalVector b(dim + 1, 0);
  std::size_t c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0; j < dim; ++j) a[j][c] = pts[i][j];
    a[dim][c] = 1;
    ++c;
  }
  for (std::size_t j = 0; j < dim; ++j) b[j] = pts[skip][j];
  b[dim] = 1;
  return lp::maximize_standard(a, b, RationalVector(cols, 0)).status == lp::Status::Optimal;
}

std::vector<RationalVector> extreme_points(const std::vector<RationalVector>& pts, int affine_dim) {
  if (pts.size() <= static_cast<std::size_t>(affine_dim) + 1) return pts;
  if (pts[0].size() == 2 && affine_dim == 2) return planar_extreme_points(pts);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!in_hull_of_others(pts, i)) out.push_back(pts[i]);
  return out;
}

}  // namespace

bool operator<(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.rhs < b.rhs;
}

LatticePointSet::LatticePointSet(std::size_t dim, std::vector<IntVector> points)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dim_) throw Error("lattice point has wrong dimension");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticePointSet::contains(const IntVector& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<IntVector> LatticePointSet::difference(const LatticePointSet& other) const {
  std::vector<IntVector> out;
  std::set_difference(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                      std::back_inserter(out));
  return out;
}

HPolytope::HPolytope(std::size_t dim, std::vector<HalfSpace> halfspaces) : dim_(dim) {
  if (dim == 0) throw PreconditionError("polytope dimension must be positive");
  for (auto& h : halfspaces) {
    if (h.normal.size() != dim) throw PreconditionError("halfspace normal has wrong dimension");
    auto g = gcd_of(h.normal);
    if (g == 0) throw PreconditionError("halfspace normal is zero");
    if (g > 1) {
      for (auto& x : h.normal) x /= g;
      h.rhs /= static_cast<long>(g);
    }
  }
  std::sort(halfspaces.begin(), halfspaces.end());
  for (auto& h : halfspaces)
    if (halfspaces_.empty() || halfspaces_.back().normal != h.normal) halfspaces_.push_back(std::move(h));

  RationalMatrix a;
  RationalVector b;
  for (const auto& h : halfspaces_) {
    a.push_back(toricdeg::to_rational(h.normal));
    b.push_back(h.rhs);
  }
  for (std::size_t j = 0; j < dim_ && bounded_ && !empty_; ++j) {
    for (int sign : {1, -1}) {
      RationalVector c(dim_, 0);
      c[j] = sign;
      auto r = lp::maximize(a, b, c);
      if (r.status == lp::Status::Infeasible) {
        empty_ = true;
        break;
      }
      if (r.status == lp::Status::Unbounded) {
        bounded_ = false;
        break;
      }
    }
  }
  if (!bounded_ || empty_) return;

  for_each_subset(halfspaces_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix m;
    RationalVector rhs;
    for (auto i : idx) {
      m.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    auto x = linalg::solve(std::move(m), std::move(rhs));
    if (x && contains(*x)) vertices_.push_back(std::move(*x));
  });
  sort_unique(vertices_);
  affine_dim_ = affine_dimension_of(vertices_);
}

HPolytope HPolytope::from_rows(std::size_t dim, const RationalMatrix& rows) {
  std::vector<HalfSpace> hs;
  for (const auto& row : rows) {
    if (row.size() != dim + 1) throw PreconditionError("inequality row has wrong length");
    RationalVector normal(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dim));
    IntVector prim = primitive_integer_multiple(normal);
    // prim = s * normal for some positive rational s.
    std::size_t j = 0;
    while (j < dim && normal[j] == 0) ++j;
    if (j == dim) throw PreconditionError("halfspace normal is zero");
    Rational s = Rational(static_cast<long>(prim[j])) / normal[j];
    hs.push_back({std::move(prim), row[dim] * s});
  }
  return HPolytope(dim, std::move(hs));
}

const std::vector<RationalVector>& HPolytope::vertex_list() const {
  if (!bounded_) throw PreconditionError("unbounded");
  if (empty_) throw PreconditionError("empty");
  return vertices_;
}

bool HPolytope::contains(const RationalVector& p) const {
  for (const auto& h : halfspaces_)
    if (dot(h.normal, p) > h.rhs) return false;
  return true;
}

bool HPolytope::contains(const IntVector& p) const {
  for (const auto& h : halfspaces_)
    if (Rational(static_cast<long>(dot(h.normal, p))) > h.rhs) return false;
  return true;
}

RationalVector AffineUnimodularMap::apply(const RationalVector& x) const {
  RationalVector y = linalg::apply(linear, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

VPolytope vertices(const HPolytope& p) { return {p.dim(), p.vertex_list()}; }

HPolytope hull(std::size_t dim, const std::vector<RationalVector>& input) {
  if (input.empty()) throw PreconditionError("hull of an empty point set");
  std::vector<RationalVector> pts(input);
  for (const auto& p : pts)
    if (p.size() != dim) throw PreconditionError("point has wrong dimension");
  sort_unique(pts);

  RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  auto equations = linalg::integer_nullspace(diffs, dim);
  const int affine_dim = static_cast<int>(dim - equations.size());

  std::vector<HalfSpace> hs;
  RationalMatrix eq_rows;
  for (const auto& e : equations) {
    Rational v = dot(e, pts[0]);
    IntVector neg(e);
    for (auto& x : neg) x = -x;
    hs.push_back({e, v});
    hs.push_back({neg, -v});
    eq_rows.push_back(toricdeg::to_rational(e));
  }

  if (affine_dim > 0) {
    auto ext = extreme_points(pts, affine_dim);
    std::set<std::pair<IntVector, Rational>> seen;
    for_each_subset(ext.size(), static_cast<std::size_t>(affine_dim), [&](const std::vector<std::size_t>& idx) {
      RationalMatrix m(eq_rows);
      for (std::size_t i = 1; i < idx.size(); ++i) {
        RationalVector d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = ext[idx[i]][j] - ext[idx[0]][j];
        m.push_back(std::move(d));
      }
      auto ns = linalg::integer_nullspace(m, dim);
      if (ns.size() != 1) return;
      IntVector w = ns[0];
      Rational level = dot(w, ext[idx[0]]);
      bool below = true, above = true;
      for (const auto& q : ext) {
        Rational v = dot(w, q);
        if (v > level) below = false;
        if (v < level) above = false;
      }
      if (!below && !above) return;
      if (!below) {
        for (auto& x : w) x = -x;
        level = -level;
      }
      if (seen.emplace(w, level).second) hs.push_back({std::move(w), level});
    });
  }
  return HPolytope(dim, std::move(hs));
}

HPolytope hull(const LatticePointSet& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(toricdeg::to_rational(p));
  return hull(points.dim(), pts);
}

LatticePointSet lattice_points(const HPolytope& p) {
  if (!p.is_bounded()) throw PreconditionError("unbounded");
  const std::size_t n = p.dim();
  if (p.is_empty()) return LatticePointSet(n);
  const auto& verts = p.vertex_list();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = to_int64(ceil_of(mn));
    hi[j] = to_int64(floor_of(mx));
    if (lo[j] > hi[j]) return LatticePointSet(n);
  }
  std::vector<std::pair<IntVector, std::int64_t>> rows;
  for (const auto& h : p.halfspaces()) rows.emplace_back(h.normal, to_int64(floor_of(h.rhs)));

  std::vector<IntVector> out;
  IntVector x(lo);
  for (;;) {
    bool inside = true;
    for (const auto& [a, b] : rows)
      if (dot(a, x) > b) {
        inside = false;
        break;
      }
    if (inside) out.push_back(x);
    std::size_t j = n;
    while (j > 0 && x[j - 1] == hi[j - 1]) {
      x[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) break;
    ++x[j - 1];
  }
  return LatticePointSet(n, std::move(out));
}

HPolytope dilate(const HPolytope& p, const Rational& factor) {
  if (factor <= 0) throw PreconditionError("dilation factor must be positive");
  std::vector<HalfSpace> hs(p.halfspaces());
  for (auto& h : hs) h.rhs *= factor;
  return HPolytope(p.dim(), std::move(hs));
}

HPolytope dilate(const HPolytope& p, int m) {
  if (m < 1) throw PreconditionError("dilation factor must be >= 1");
  return dilate(p, Rational(m));
}

HPolytope transform(const HPolytope& p, const AffineUnimodularMap& map) {
  IntMatrix inv = linalg::unimodular_inverse(map.linear);
  std::vector<HalfSpace> hs;
  for (const auto& h : p.halfspaces()) {
    IntVector normal(p.dim(), 0);
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t i = 0; i < p.dim(); ++i) normal[j] += h.normal[i] * inv[i][j];
    Rational rhs = h.rhs + dot(normal, map.translation);
    hs.push_back({std::move(normal), std::move(rhs)});
  }
  return HPolytope(p.dim(), std::move(hs));
}

bool is_integral(const HPolytope& p) {
  for (const auto& v : p.vertex_list())
    for (const auto& x : v)
      if (!toricdeg::is_integral(x)) return false;
  return true;
}

bool same_point_set(const HPolytope& a, const HPolytope& b) {
  if (a.dim() != b.dim()) return false;
  if (!a.is_bounded() || !b.is_bounded()) throw PreconditionError("unbounded");
  if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
  return a.vertex_list() == b.vertex_list();
}

LatticePointSet minkowski_sum(const LatticePointSet& a, const LatticePointSet& b) {
  std::vector<IntVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) {
      IntVector s(p);
      for (std::size_t j = 0; j < s.size(); ++j) s[j] += q[j];
      out.push_back(std::move(s));
    }
  return LatticePointSet(a.dim(), std::move(out));
}

NormalityReport is_normal(const HPolytope& p, int max_level) {
  if (!is_integral(p)) throw PreconditionError("normality check needs an integral polytope");
  NormalityReport report;
  const LatticePointSet base = lattice_points(p);
  LatticePointSet sums = base;
  for (int m = 2; m <= max_level; ++m) {
    sums = minkowski_sum(sums, base);
    auto missing = lattice_points(dilate(p, m)).difference(sums);
    if (!missing.empty()) {
      report.normal = false;
      report.counterexample = std::make_pair(m, missing.front());
      return report;
    }
  }
  return report;
}

namespace {

// Facets of a full-dimensional bounded polytope tight at v, as rows.
RationalMatrix tight_rows(const HPolytope& minimal, const RationalVector& v) {
  RationalMatrix rows;
  for (const auto& h : minimal.halfspaces())
    if (dot(h.normal, v) == h.rhs) rows.push_back(toricdeg::to_rational(h.normal));
  return rows;
}

std::optional<std::vector<IntVector>> simple_vertex_edges(const HPolytope& minimal, const RationalVector& v) {
  auto rows = tight_rows(minimal, v);
  if (rows.size() != minimal.dim()) return std::nullopt;
  auto inv = linalg::inverse(rows);
  if (!inv) return std::nullopt;
  const std::size_t n = minimal.dim();
  std::vector<IntVector> edges;
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector d(n);
    for (std::size_t r = 0; r < n; ++r) d[r] = -(*inv)[r][c];
    edges.push_back(primitive_integer_multiple(d));
  }
  auto first_nonzero = [](const IntVector& e) {
    std::size_t i = 0;
    while (i < e.size() && e[i] == 0) ++i;
    return i;
  };
  std::sort(edges.begin(), edges.end(), [&](const IntVector& a, const IntVector& b) {
    auto fa = first_nonzero(a), fb = first_nonzero(b);
    if (fa != fb) return fa < fb;
    return a < b;
  });
  return edges;
}

HPolytope minimal_full_dimensional(const HPolytope& p) {
  if (!p.is_bounded()) throw PreconditionError("unbounded");
  if (p.is_empty()) throw PreconditionError("empty");
  if (!p.is_full_dimensional()) throw PreconditionError("lower-dimensional polytope");
  return hull(p.dim(), p.vertex_list());
}

std::int64_t edge_determinant(const std::vector<IntVector>& edges) {
  return linalg::determinant(linalg::transpose(edges));
}

}  // namespace

SmoothnessReport is_delzant_smooth(const HPolytope& p) {
  const HPolytope minimal = minimal_full_dimensional(p);
  SmoothnessReport report;
  for (const auto& v : minimal.vertex_list()) {
    auto edges = simple_vertex_edges(minimal, v);
    if (!edges || std::abs(edge_determinant(*edges)) != 1) {
      report.smooth = false;
      report.vertex = v;
      return report;
    }
  }
  return report;
}

std::vector<IntVector> edge_directions(const HPolytope& p, const RationalVector& v) {
  const HPolytope minimal = minimal_full_dimensional(p);
  const auto& verts = minimal.vertex_list();
  if (!std::binary_search(verts.begin(), verts.end(), v, RationalLess{}))
    throw PreconditionError("point is not a vertex");
  auto edges = simple_vertex_edges(minimal, v);
  if (!edges) throw PreconditionError("vertex is not simple");
  return *edges;
}

NormalizedPolytope normalize_at_vertex(const HPolytope& p, const RationalVector& v) {
  auto edges = edge_directions(p, v);
  if (std::abs(edge_determinant(edges)) != 1) throw PreconditionError("non-smooth vertex");
  IntMatrix g = linalg::unimodular_inverse(linalg::transpose(edges));
  AffineUnimodularMap map{g, linalg::apply(g, v)};
  for (auto& t : map.translation) t = -t;
  HPolytope image = transform(p, map);
  return {std::move(image), std::move(map)};
}

bool is_normalized_at_origin(const HPolytope& p) {
  if (!p.is_bounded() || p.is_empty() || !p.is_full_dimensional()) return false;
  RationalVector origin(p.dim(), 0);
  try {
    return edge_directions(p, origin) == linalg::identity(p.dim());
  } catch (const PreconditionError&) {
    return false;
  }
}

Rational simplex_volume(const std::vector<RationalVector>& verts) {
  const std::size_t n = verts.size() - 1;
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = verts[i + 1][j] - verts[0][j];
  Rational det = linalg::determinant(m);
  if (det < 0) det = -det;
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  return det / Rational(fact);
}

}  // namespace toricdeg::geom
