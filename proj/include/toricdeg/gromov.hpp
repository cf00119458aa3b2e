#pragma once

#include <string>

#include "toricdeg/lattice_geometry.hpp"

/// Gromov-width lower bounds: the coroot formula for classical orbits and a
/// search for the largest unimodular simplex inside a polytope.
namespace toricdeg::gromov {

enum class Family { A, B, C, D, G2 };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Lie rank; A_r is realized in R^{r+1}, G2 in the plane x+y+z = 0 of R^3.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::size_t ambient_dim() const;
  void validate() const;
};

/// Full coroot list 2 alpha / (alpha, alpha). Rational because the long G2
/// coroots are alpha / 3.
std::vector<RationalVector> coroots(const RootSystemSpec& spec);

/// min{ |<lambda, a>| : a a coroot, <lambda, a> != 0 }. Throws
/// PreconditionError("zero orbit") when every pairing vanishes.
Rational gw_formula(const RootSystemSpec& spec, const RationalVector& lambda);

/// Closed simplex {x >= 0, sum x <= a}; open[i] says whether halfspaces()[i]
/// is strict in the half-open simplex.
struct Simplex {
  geom::HPolytope closed;
  std::vector<bool> open;
};

Simplex simplex(std::size_t n, const Rational& a);

struct SimplexFit {
  Rational a;
  IntMatrix psi;
  RationalVector x;

  friend bool operator==(const SimplexFit&, const SimplexFit&) = default;
};

/// Psi(int S(a)) + x inside the closed convex delta. Since delta is closed
/// and convex this is the same as the closed simplex's vertices landing in
/// delta. Throws PreconditionError when |det psi| != 1.
bool fits(const geom::HPolytope& delta, const SimplexFit& fit);

/// Largest a (and a translation) for a fixed psi, by exact LP in (a, x).
SimplexFit best_fit_for(const geom::HPolytope& delta, const IntMatrix& psi);

/// Longest segment in direction v inside delta.
Rational max_segment(const geom::HPolytope& delta, const IntVector& v);

enum class SearchMode { Exhaustive, Heuristic };

struct SearchOptions {
  int bound = 3;
  SearchMode mode = SearchMode::Exhaustive;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 0;
  int restarts = 8;
  int steps = 200;
};

struct SearchResult {
  SimplexFit fit;
  /// True for exhaustive mode: fit.a is the maximum over all psi with
  /// entries in [-bound, bound]. Heuristic results are valid fits only.
  bool certified = false;
  std::size_t evaluated = 0;
};

/// Ties in a go to the smallest sum of |psi| entries, then to the
/// lexicographically largest row-major psi over all column orders, so the
/// identity wins whenever it is optimal.
SearchResult best_simplex_lb(const geom::HPolytope& delta, const SearchOptions& options);

}  // namespace toricdeg::gromov
