#pragma once

#include <random>

#include "toricdeg/lattice_geometry.hpp"
#include "toricdeg/valuation.hpp"

namespace toricdeg::testing {

inline RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline geom::HPolytope from_rows(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.push_back(rv(r));
  return geom::HPolytope::from_rows(dim, m);
}

inline geom::HPolytope box(const IntVector& sides) {
  std::vector<geom::HalfSpace> hs;
  const std::size_t n = sides.size();
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0), f(n, 0);
    e[j] = 1;
    f[j] = -1;
    hs.push_back({e, Rational(static_cast<long>(sides[j]))});
    hs.push_back({f, 0});
  }
  return geom::HPolytope(n, hs);
}

inline geom::HPolytope hull_of(std::size_t dim, const std::vector<IntVector>& pts) {
  std::vector<RationalVector> r;
  for (const auto& p : pts) r.push_back(to_rational(p));
  return geom::hull(dim, r);
}

/// Random full-dimensional integral polygon: hull of random points in [0,size]^2.
inline geom::HPolytope random_polygon(std::mt19937_64& rng, int size, int count) {
  std::uniform_int_distribution<int> d(0, size);
  for (;;) {
    std::vector<IntVector> pts;
    for (int i = 0; i < count; ++i) pts.push_back({d(rng), d(rng)});
    auto p = hull_of(2, pts);
    if (p.is_full_dimensional()) return p;
  }
}

/// Random unimodular matrix as a product of elementary moves.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int s = 0; s < steps; ++s) {
    auto i = idx(rng), j = idx(rng);
    if (i == j) {
      for (auto& x : m[i]) x = -x;
      continue;
    }
    std::int64_t f = sign(rng) ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) m[i][c] += f * m[j][c];
  }
  return m;
}

}  // namespace toricdeg::testing

namespace toricdeg::testing {

/// {x >= 0, x_j + sum_{i<j} a[i][j] x_i <= lambda_j}: the Bott-tower shape
/// with normals e_j + column j of a strictly upper triangular a.
inline geom::HPolytope tower(const IntMatrix& a, const IntVector& lambda) {
  const std::size_t n = lambda.size();
  std::vector<geom::HalfSpace> hs;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector lower(n, 0), upper(n, 0);
    lower[j] = -1;
    upper[j] = 1;
    for (std::size_t i = 0; i < j; ++i) upper[i] = a[i][j];
    hs.push_back({lower, 0});
    hs.push_back({upper, Rational(static_cast<long>(lambda[j]))});
  }
  return geom::HPolytope(n, hs);
}

// Random integral Delzant polygon normalized at the origin.
inline geom::HPolytope random_smooth_polygon(std::mt19937_64& rng) {
  for (;;) {
    auto p = random_polygon(rng, 4, 5);
    if (!geom::is_delzant_smooth(p).smooth) continue;
    return geom::normalize_at_vertex(p, p.vertex_list().front()).polytope;
  }
}

inline geom::HPolytope random_smooth_tower(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2), lam(1, 3);
  for (;;) {
    IntMatrix a(n, IntVector(n, 0));
    IntVector lambda(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = entry(rng);
    for (auto& l : lambda) l = lam(rng);
    auto p = tower(a, lambda);
    if (p.is_empty() || !p.is_full_dimensional() || p.vertex_list().size() != (1u << n)) continue;
    if (geom::is_delzant_smooth(p).smooth && geom::is_normalized_at_origin(p)) return p;
  }
}

inline valuation::SlideDirection random_direction(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<std::int64_t> cs(1, 4);
  std::size_t k = idx(rng), l = idx(rng);
  while (l == k) l = idx(rng);
  if (k > l) std::swap(k, l);
  return {k, l, cs(rng)};
}

}  // namespace toricdeg::testing
